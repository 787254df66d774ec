#ifndef QK_TOP_HPP
#define QK_TOP_HPP

#include <utility>

#include "qk/types.hpp"

namespace qk {

// Spin-j kicked top. Basis |j,m> ordered m = j, j-1, ..., -j.
struct TopParams {
    double j = 1.0;     // positive integer or half-integer
    double hbar = 1.0;
    double k = 0.0;     // kick (torsion) strength

    int dim() const { return static_cast<int>(std::lround(2.0 * j)) + 1; }
    void validate() const;
};

struct SpinOperators {
    Matrix jx, jy, jz;
};

// Jz = hbar*diag(j..-j); Jx, Jy from ladder matrix elements.
SpinOperators spin_operators(const TopParams& p);

// One-step top map: exp(-i k Jz^2/(2 j hbar)) * exp(-i pi Jy/(2 hbar)).
Matrix top_floquet(const TopParams& p);

// The torsion phases alone, diag entries exp(-i k m^2 hbar/(2j)), m = j..-j.
Vector top_torsion_phases(const TopParams& p);

// 0.5*log((2j)! / ((j+m)!(j-m)!)) per basis index (m = j..-j).
RealVector spin_coherent_log_norms(double j);

// |theta,phi>: amplitude on |j,m> is
// gamma^(j-m)/(1+|gamma|^2)^j * sqrt((2j)!/((j+m)!(j-m)!)),
// gamma = exp(i phi) tan(theta/2). Evaluated through log-factorials.
Vector spin_coherent(const TopParams& p, double theta, double phi);
Vector spin_coherent_with(const RealVector& log_norms, double j, double theta,
                          double phi);

// Diagonal phases of exp(-i eps Jz(x)Jz/(j hbar)) in the product basis,
// flat index i1*d + i2 (kron order). Requires j1 == j2 and equal hbar.
Vector top_coupling(const TopParams& p1, const TopParams& p2, double eps);

// V = Jz/sqrt(j) (x) Jz/sqrt(j): the single factor pair of the coupling.
std::vector<std::pair<Matrix, Matrix>> top_coupling_factors(const TopParams& p);

}  // namespace qk

#endif
