#ifndef QK_DFT_HPP
#define QK_DFT_HPP

#include "qk/types.hpp"

namespace qk {

enum class FftDir { Forward, Inverse };

// Unitary-normalized DFT (1/sqrt(N) both directions).
// Forward kernel exp(-2*pi*i*p*n/N), inverse exp(+2*pi*i*p*n/N).
Vector dft(const Vector& v, FftDir dir);

void dft_inplace(cxd* data, int n, FftDir dir);

// howmany transforms of length n; element j of transform b sits at
// data[b*dist + j*stride].
void dft_batch_inplace(cxd* data, int n, int howmany, int stride, int dist,
                       FftDir dir);

}  // namespace qk

#endif
