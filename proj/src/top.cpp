#include "qk/top.hpp"

#include <cmath>

#include "qk/linalg.hpp"

namespace qk {

void TopParams::validate() const {
    const double twoj = 2.0 * j;
    if (j <= 0.0 || std::abs(twoj - std::lround(twoj)) > 1e-9)
        throw std::invalid_argument("TopParams: j must be a positive integer or half-integer");
    if (hbar <= 0.0) throw std::invalid_argument("TopParams: hbar must be > 0");
    if (k < 0.0) throw std::invalid_argument("TopParams: k must be >= 0");
}

SpinOperators spin_operators(const TopParams& p) {
    p.validate();
    const int d = p.dim();
    const double j = p.j;
    Matrix jz = Matrix::Zero(d, d), jp = Matrix::Zero(d, d);
    for (int a = 0; a < d; ++a) {
        const double m = j - a;
        jz(a, a) = p.hbar * m;
        // J+|j,m> = hbar sqrt(j(j+1) - m(m+1)) |j,m+1>; |j,m+1> is index a-1
        if (a > 0) jp(a - 1, a) = p.hbar * std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    }
    const Matrix jm = jp.adjoint();
    SpinOperators ops;
    ops.jx = 0.5 * (jp + jm);
    ops.jy = -0.5 * kI * (jp - jm);
    ops.jz = jz;
    return ops;
}

Vector top_torsion_phases(const TopParams& p) {
    p.validate();
    const int d = p.dim();
    Vector phases(d);
    for (int a = 0; a < d; ++a) {
        const double m = p.j - a;
        phases[a] = std::exp(-kI * (p.k * m * m * p.hbar / (2.0 * p.j)));
    }
    return phases;
}

Matrix top_floquet(const TopParams& p) {
    const SpinOperators ops = spin_operators(p);
    const Matrix rot = unitary_exp(ops.jy, kPi / (2.0 * p.hbar));
    return top_torsion_phases(p).asDiagonal() * rot;
}

RealVector spin_coherent_log_norms(double j) {
    const int d = static_cast<int>(std::lround(2.0 * j)) + 1;
    RealVector out(d);
    const double lg2j = std::lgamma(2.0 * j + 1.0);
    for (int a = 0; a < d; ++a) {
        const double m = j - a;
        out[a] = 0.5 * (lg2j - std::lgamma(j + m + 1.0) - std::lgamma(j - m + 1.0));
    }
    return out;
}

Vector spin_coherent_with(const RealVector& log_norms, double j, double theta,
                          double phi) {
    const int d = static_cast<int>(log_norms.size());
    Vector psi = Vector::Zero(d);
    if (theta < 0.0 || theta > kPi)
        throw std::invalid_argument("spin_coherent: theta outside [0, pi]");
    // Poles: gamma = 0 resp. gamma -> infinity.
    if (theta == 0.0) { psi[0] = 1.0; return psi; }
    if (theta == kPi) { psi[d - 1] = 1.0; return psi; }

    const double t = std::tan(0.5 * theta);
    if (t == 0.0) { psi[0] = 1.0; return psi; }
    const double logt = std::log(t);
    // log(1+t^2), written to stay finite for t >> 1
    const double log1t2 = t <= 1.0 ? std::log1p(t * t)
                                   : 2.0 * logt + std::log1p(1.0 / (t * t));
    for (int a = 0; a < d; ++a) {
        const double m = j - a;
        const double logmag = (j - m) * logt - j * log1t2 + log_norms[a];
        psi[a] = std::exp(logmag) * std::exp(kI * (phi * (j - m)));
    }
    psi /= psi.norm();
    return psi;
}

Vector spin_coherent(const TopParams& p, double theta, double phi) {
    p.validate();
    return spin_coherent_with(spin_coherent_log_norms(p.j), p.j, theta, phi);
}

Vector top_coupling(const TopParams& p1, const TopParams& p2, double eps) {
    p1.validate();
    p2.validate();
    if (std::abs(p1.j - p2.j) > 1e-12)
        throw std::invalid_argument("top_coupling: subsystems must share j");
    if (std::abs(p1.hbar - p2.hbar) > 1e-12)
        throw std::invalid_argument("top_coupling: subsystems must share hbar");
    const int d = p1.dim();
    const double j = p1.j, hbar = p1.hbar;
    Vector phases(static_cast<Eigen::Index>(d) * d);
    for (int a = 0; a < d; ++a) {
        const double m1 = j - a;
        for (int b = 0; b < d; ++b) {
            const double m2 = j - b;
            phases[static_cast<Eigen::Index>(a) * d + b] =
                std::exp(-kI * (eps * m1 * m2 * hbar / j));
        }
    }
    return phases;
}

std::vector<std::pair<Matrix, Matrix>> top_coupling_factors(const TopParams& p) {
    const Matrix q = spin_operators(p).jz / std::sqrt(p.j);
    return {{q, q}};
}

}  // namespace qk
