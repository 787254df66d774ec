#ifndef QK_EVOLUTION_HPP
#define QK_EVOLUTION_HPP

#include <memory>
#include <utility>
#include <vector>

#include "qk/propagator.hpp"
#include "qk/rotor.hpp"
#include "qk/top.hpp"
#include "qk/types.hpp"

namespace qk {

enum class SystemKind { Top, Rotor };

// Joint pure state, coefficient of |i> (x) |j> at coeffs(i, j).
struct BipartiteState {
    Matrix coeffs;
    int t = 0;

    int d1() const { return static_cast<int>(coeffs.rows()); }
    int d2() const { return static_cast<int>(coeffs.cols()); }
    double norm() const { return coeffs.norm(); }

    static BipartiteState product(const Vector& a, const Vector& b);
};

struct ReducedDensity {
    Matrix rho;
    int dim() const { return static_cast<int>(rho.rows()); }
};

struct EntropySeries {
    std::vector<int> times;
    std::vector<double> values;
    double s_inf = 1.0;  // 1 - 1/min(d1,d2), the reachable maximum
};

// One-step dynamics of the pair: U_eps (U1 (x) U2), with the coupling stored
// as elementwise phases on the coefficient matrix.
struct FloquetSystem {
    SystemKind kind = SystemKind::Top;
    std::shared_ptr<const Propagator> u1, u2;
    Eigen::ArrayXXcd coupling;  // d1 x d2
    std::vector<std::pair<Matrix, Matrix>> factors;
    double eps = 0.0;
    double hbar = 1.0;

    int d1() const { return u1 ? u1->dim() : 0; }
    int d2() const { return u2 ? u2->dim() : 0; }
};

FloquetSystem make_top_pair(const TopParams& p1, const TopParams& p2, double eps);
FloquetSystem make_rotor_pair(const RotorParams& p1, const RotorParams& p2,
                              double eps);

// Reshape a kron-ordered diagonal phase vector (index i*d2 + j) to d1 x d2.
Eigen::ArrayXXcd coupling_grid(const Vector& phases, int d1, int d2);

void step(const FloquetSystem& sys, BipartiteState& psi);

ReducedDensity reduced_density(const BipartiteState& psi);

// 1 - Tr(rho^2), clamped to the [0, 1-1/d] reporting range; violations
// beyond 1e-10 raise NumericalError.
double linear_entropy(const ReducedDensity& rho);

// Purity of the joint state without forming the larger reduced matrix.
double purity(const BipartiteState& psi);

EntropySeries evolve_series(const FloquetSystem& sys, BipartiteState psi, int t_max,
                            int stride = 1);

// Advance the state n steps in place.
void evolve_steps(const FloquetSystem& sys, BipartiteState& psi, int n);

}  // namespace qk

#endif
