#ifndef QK_ROTOR_HPP
#define QK_ROTOR_HPP

#include <utility>

#include "qk/types.hpp"

namespace qk {

// Kicked rotor quantized on the 2pi-periodic torus in theta and I.
// N = 2pi/hbar; position grid theta_n = 2pi n/N. Momentum values are kept
// in DFT index order: I[p] = hbar * n'(p) with n'(p) = p for p < ceil(N/2)
// and p - N otherwise, so n' runs over {-N/2, ..., N/2-1} for even N.
struct RotorParams {
    int n = 0;
    double hbar = 0.0;
    double k = 0.0;
    RealVector theta_grid;
    RealVector momentum_grid;

    int signed_index(int p) const { return p < (n + 1) / 2 ? p : p - n; }
};

// Builds the torus grids from hbar; rejects hbar with non-integer 2pi/hbar.
RotorParams rotor_space(double hbar, double k = 0.0);

// exp(-i I^2/(2 hbar)) per momentum-basis entry (DFT order).
Vector rotor_free_phases(const RotorParams& p);

// exp(-i k cos(theta)/hbar) per position-basis entry.
Vector rotor_kick_phases(const RotorParams& p);

// One split step on a position-basis state: kick, DFT, free, inverse DFT.
Vector rotor_step(const RotorParams& p, const Vector& psi);

// exp(-i eps cos(theta_a - theta_b)/hbar) on the product position basis,
// flat index a*N + b.
Vector rotor_coupling_phases(const RotorParams& p, double eps);

// cos(t1-t2) = cos t1 cos t2 + sin t1 sin t2: two diagonal factor pairs.
std::vector<std::pair<Matrix, Matrix>> rotor_coupling_factors(const RotorParams& p);

// Wrapped-Gaussian coherent state centred at (theta0, I0) with width sigma.
// I0 must lie on the momentum grid (integer multiple of hbar).
Vector torus_coherent(const RotorParams& p, double theta0, double i0, double sigma);

}  // namespace qk

#endif
