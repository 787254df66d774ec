#include "qk/dft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace qk {
namespace {

// Plans are created once per shape and reused via fftw_execute_dft, which is
// thread-safe; creation itself is serialized. FFTW_UNALIGNED keeps one plan
// valid for any buffer, FFTW_ESTIMATE keeps plan choice reproducible.
class PlanCache {
  public:
    fftw_plan get(int n, int howmany, int stride, int dist, int sign) {
        const Key key{n, howmany, stride, dist, sign};
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<cxd> scratch(static_cast<size_t>(dist) * (howmany - 1) +
                                 static_cast<size_t>(stride) * (n - 1) + 1);
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan plan = fftw_plan_many_dft(1, &n, howmany, buf, nullptr, stride,
                                            dist, buf, nullptr, stride, dist, sign,
                                            FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!plan) throw NumericalError("dft: fftw planning failed");
        plans_.emplace(key, plan);
        return plan;
    }

  private:
    using Key = std::tuple<int, int, int, int, int>;
    std::mutex mutex_;
    std::map<Key, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

}  // namespace

void dft_batch_inplace(cxd* data, int n, int howmany, int stride, int dist,
                       FftDir dir) {
    if (n < 1) throw std::invalid_argument("dft: dimension must be >= 1");
    const int sign = dir == FftDir::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
    fftw_plan plan = cache().get(n, howmany, stride, dist, sign);
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plan, buf, buf);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int b = 0; b < howmany; ++b) {
        cxd* first = data + static_cast<size_t>(b) * dist;
        for (int j = 0; j < n; ++j) first[static_cast<size_t>(j) * stride] *= scale;
    }
}

void dft_inplace(cxd* data, int n, FftDir dir) {
    dft_batch_inplace(data, n, 1, 1, 0, dir);
}

Vector dft(const Vector& v, FftDir dir) {
    Vector out = v;
    dft_inplace(out.data(), static_cast<int>(out.size()), dir);
    return out;
}

}  // namespace qk
