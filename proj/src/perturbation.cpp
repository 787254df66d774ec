#include "qk/perturbation.hpp"

#include <cmath>

namespace qk {

CorrelationTensor heisenberg_correlations(const Propagator& u,
                                          const std::vector<Matrix>& q_ops,
                                          const Vector& psi0, int t_max) {
    const int d = u.dim();
    const int n_ops = static_cast<int>(q_ops.size());
    if (n_ops == 0) throw std::invalid_argument("heisenberg_correlations: no operators");
    if (t_max < 1) throw std::invalid_argument("heisenberg_correlations: t_max must be >= 1");
    if (psi0.size() != d || std::abs(psi0.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("heisenberg_correlations: psi0 not a normalized state of dim " +
                                    std::to_string(d));
    if (u.unitarity_defect() > 1e-10)
        throw std::invalid_argument("heisenberg_correlations: propagator is not unitary");
    for (const auto& q : q_ops)
        if (q.rows() != d || q.cols() != d)
            throw std::invalid_argument("heisenberg_correlations: operator dimension mismatch");

    // forward states |psi(l)> = U^l |psi0>
    std::vector<Vector> psis(t_max + 1);
    psis[0] = psi0;
    for (int l = 1; l <= t_max; ++l) {
        psis[l] = psis[l - 1];
        u.apply(psis[l]);
    }
    // g[a][l] = q_a |psi(l)>, means <psi(l)|q_a|psi(l)>
    std::vector<std::vector<Vector>> g(n_ops, std::vector<Vector>(t_max + 1));
    std::vector<std::vector<cxd>> mean(n_ops, std::vector<cxd>(t_max + 1));
    for (int a = 0; a < n_ops; ++a)
        for (int l = 1; l <= t_max; ++l) {
            g[a][l] = q_ops[a] * psis[l];
            mean[a][l] = psis[l].dot(g[a][l]);
        }

    CorrelationTensor tensor;
    tensor.n_ops = n_ops;
    tensor.t_max = t_max;
    tensor.c.assign(static_cast<size_t>(n_ops) * n_ops, Matrix::Zero(t_max, t_max));

    // Upper half l >= m by forward propagation of q_b|psi(m)>; the raw
    // two-time moment is <psi(l)| q_a U^(l-m) q_b |psi(m)>.
    std::vector<Vector> aux(n_ops);
    for (int m = 1; m <= t_max; ++m) {
        for (int b = 0; b < n_ops; ++b) aux[b] = g[b][m];
        for (int l = m; l <= t_max; ++l) {
            if (l > m)
                for (int b = 0; b < n_ops; ++b) u.apply(aux[b]);
            for (int a = 0; a < n_ops; ++a)
                for (int b = 0; b < n_ops; ++b) {
                    const cxd raw = g[a][l].dot(aux[b]);
                    tensor.c[static_cast<size_t>(a) * n_ops + b](l - 1, m - 1) =
                        raw - mean[a][l] * mean[b][m];
                }
        }
    }
    // Lower half by Hermitian symmetry C[a,b](l,m) = conj(C[b,a](m,l)).
    for (int a = 0; a < n_ops; ++a)
        for (int b = 0; b < n_ops; ++b) {
            Matrix& cab = tensor.c[static_cast<size_t>(a) * n_ops + b];
            const Matrix& cba = tensor.c[static_cast<size_t>(b) * n_ops + a];
            for (int m = 2; m <= t_max; ++m)
                for (int l = 1; l < m; ++l)
                    cab(l - 1, m - 1) = std::conj(cba(m - 1, l - 1));
        }
    return tensor;
}

DMatrix d_matrix(const CorrelationTensor& c1, const CorrelationTensor& c2) {
    if (c1.n_ops != c2.n_ops || c1.t_max != c2.t_max)
        throw std::invalid_argument("d_matrix: correlation tensor shapes differ");
    DMatrix dm;
    dm.t_max = c1.t_max;
    dm.d = Matrix::Zero(c1.t_max, c1.t_max);
    for (size_t idx = 0; idx < c1.c.size(); ++idx)
        dm.d.array() += c1.c[idx].array() * c2.c[idx].array();
    return dm;
}

DecayFit fit_decay(const DMatrix& dm, const FitOptions& opts) {
    const int t = dm.t_max;
    if (opts.l0 < 1) throw std::invalid_argument("fit_decay: l0 must be >= 1");
    if (t < opts.l0 + 4)
        throw FitError("fit_decay: horizon " + std::to_string(t) +
                       " too short for transient prefix l0=" + std::to_string(opts.l0));

    DecayFit fit;
    fit.c_hat.reserve(t - opts.l0 + 1);
    for (int s = 0; s <= t - opts.l0; ++s) {
        double sum = 0.0;
        int count = 0;
        for (int l = opts.l0; l + s <= t; ++l, ++count) sum += dm.at(l, l + s).real();
        fit.c_hat.push_back(sum / count);
    }
    fit.d0 = fit.c_hat[0];
    if (!(fit.d0 > 0.0))
        throw FitError("fit_decay: C_hat(0) = " + std::to_string(fit.d0) +
                       " is not positive; no usable correlation signal");

    const double floor = opts.noise_floor * fit.d0;
    int s_max = 0;
    for (int s = 1; s < static_cast<int>(fit.c_hat.size()); ++s) {
        if (std::abs(fit.c_hat[s]) < floor) break;
        s_max = s;
    }
    if (s_max < 2)
        throw FitError("fit_decay: only " + std::to_string(s_max) +
                       " separation(s) above the noise floor; decay too fast to fit");

    // least squares on log|C_hat(s)| over s = 1..s_max
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int n = s_max;
    for (int s = 1; s <= s_max; ++s) {
        const double y = std::log(std::abs(fit.c_hat[s]));
        sx += s;
        sy += y;
        sxx += static_cast<double>(s) * s;
        sxy += s * y;
    }
    const double denom = n * sxx - sx * sx;
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;
    if (slope >= 0.0)
        throw FitError("fit_decay: correlations do not decay (slope " +
                       std::to_string(slope) +
                       " >= 0); initial condition is not in a chaotic sea");
    fit.gamma = -slope;
    fit.s_min = 1;
    fit.s_max = s_max;
    fit.n_points = n;
    double ss = 0.0;
    for (int s = 1; s <= s_max; ++s) {
        const double r = std::log(std::abs(fit.c_hat[s])) - (intercept + slope * s);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

EntropySeries s_pt_series(const DMatrix& dm, double eps, double hbar) {
    if (hbar <= 0.0) throw std::invalid_argument("s_pt_series: hbar must be > 0");
    const double s0 = 2.0 * eps * eps / (hbar * hbar);
    EntropySeries series;
    series.times.reserve(dm.t_max + 1);
    series.values.reserve(dm.t_max + 1);
    series.times.push_back(0);
    series.values.push_back(0.0);
    cxd total = 0.0;
    for (int t = 1; t <= dm.t_max; ++t) {
        total += dm.at(t, t);
        for (int m = 1; m < t; ++m) total += dm.at(t, m) + dm.at(m, t);
        if (std::abs(total.imag()) > 1e-9 * std::abs(total) &&
            std::abs(total.imag()) > 1e-30)
            throw NumericalError("s_pt_series: double sum acquired an imaginary part");
        series.times.push_back(t);
        series.values.push_back(s0 * total.real());
    }
    return series;
}

RateFit production_rate(const EntropySeries& s, double gamma, double saturation_cap,
                        double s_inf) {
    if (gamma <= 0.0) throw std::invalid_argument("production_rate: gamma must be > 0");
    if (s.times.size() != s.values.size() || s.times.empty())
        throw std::invalid_argument("production_rate: malformed series");
    if (s_inf <= 0.0) s_inf = s.s_inf;
    const double cap = saturation_cap * s_inf;
    const int t_lo = static_cast<int>(std::ceil(5.0 / gamma));
    int t_hi = s.times.back();
    for (size_t i = 0; i < s.times.size(); ++i)
        if (s.values[i] > cap) {
            t_hi = s.times[i];
            break;
        }

    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    int n = 0;
    for (size_t i = 0; i < s.times.size(); ++i) {
        const int t = s.times[i];
        if (t < t_lo || t > t_hi) continue;
        const double x = t, y = s.values[i];
        sx += x; sy += y; sxx += x * x; sxy += x * y; syy += y * y;
        ++n;
    }
    if (n < 3)
        throw FitError("production_rate: window [" + std::to_string(t_lo) + ", " +
                       std::to_string(t_hi) + "] holds " + std::to_string(n) +
                       " samples; series saturates too fast or is too short");

    const double denom = n * sxx - sx * sx;
    RateFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    fit.t_lo = t_lo;
    fit.t_hi = t_hi;
    fit.n_points = n;
    const double ss_tot = syy - sy * sy / n;
    double ss_res = 0.0;
    for (size_t i = 0; i < s.times.size(); ++i) {
        const int t = s.times[i];
        if (t < t_lo || t > t_hi) continue;
        const double r = s.values[i] - (fit.intercept + fit.slope * t);
        ss_res += r * r;
    }
    fit.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    fit.slope_stderr = n > 2 ? std::sqrt(ss_res / (n - 2) / (sxx - sx * sx / n)) : 0.0;
    return fit;
}

double coth_prediction(double gamma0, double gamma) {
    if (gamma <= 0.0)
        throw std::invalid_argument("coth_prediction: gamma must be > 0");
    return gamma0 / std::tanh(0.5 * gamma);
}

}  // namespace qk
