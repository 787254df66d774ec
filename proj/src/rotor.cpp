#include "qk/rotor.hpp"

#include <cmath>

#include "qk/dft.hpp"

namespace qk {

RotorParams rotor_space(double hbar, double k) {
    if (hbar <= 0.0) throw std::invalid_argument("rotor_space: hbar must be > 0");
    const double ratio = 2.0 * kPi / hbar;
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) > 1e-9 || rounded < 1.0)
        throw std::invalid_argument(
            "rotor_space: 2*pi/hbar = " + std::to_string(ratio) +
            " is not a positive integer; torus quantization impossible");
    RotorParams p;
    p.n = static_cast<int>(rounded);
    p.hbar = 2.0 * kPi / p.n;
    p.k = k;
    p.theta_grid.resize(p.n);
    p.momentum_grid.resize(p.n);
    for (int i = 0; i < p.n; ++i) {
        p.theta_grid[i] = 2.0 * kPi * i / p.n;
        p.momentum_grid[i] = p.hbar * p.signed_index(i);
    }
    return p;
}

Vector rotor_free_phases(const RotorParams& p) {
    Vector phases(p.n);
    for (int i = 0; i < p.n; ++i) {
        const double I = p.momentum_grid[i];
        phases[i] = std::exp(-kI * (I * I / (2.0 * p.hbar)));
    }
    return phases;
}

Vector rotor_kick_phases(const RotorParams& p) {
    Vector phases(p.n);
    for (int i = 0; i < p.n; ++i)
        phases[i] = std::exp(-kI * (p.k * std::cos(p.theta_grid[i]) / p.hbar));
    return phases;
}

Vector rotor_step(const RotorParams& p, const Vector& psi) {
    if (psi.size() != p.n)
        throw std::invalid_argument("rotor_step: state dimension mismatch");
    Vector out = rotor_kick_phases(p).cwiseProduct(psi);
    dft_inplace(out.data(), p.n, FftDir::Forward);
    out = rotor_free_phases(p).cwiseProduct(out);
    dft_inplace(out.data(), p.n, FftDir::Inverse);
    return out;
}

Vector rotor_coupling_phases(const RotorParams& p, double eps) {
    Vector phases(static_cast<Eigen::Index>(p.n) * p.n);
    for (int a = 0; a < p.n; ++a)
        for (int b = 0; b < p.n; ++b)
            phases[static_cast<Eigen::Index>(a) * p.n + b] = std::exp(
                -kI * (eps * std::cos(p.theta_grid[a] - p.theta_grid[b]) / p.hbar));
    return phases;
}

std::vector<std::pair<Matrix, Matrix>> rotor_coupling_factors(const RotorParams& p) {
    Matrix qc = Matrix::Zero(p.n, p.n), qs = Matrix::Zero(p.n, p.n);
    for (int i = 0; i < p.n; ++i) {
        qc(i, i) = std::cos(p.theta_grid[i]);
        qs(i, i) = std::sin(p.theta_grid[i]);
    }
    return {{qc, qc}, {qs, qs}};
}

Vector torus_coherent(const RotorParams& p, double theta0, double i0, double sigma) {
    if (sigma <= 0.0) throw std::invalid_argument("torus_coherent: sigma must be > 0");
    const double n0 = i0 / p.hbar;
    if (std::abs(n0 - std::round(n0)) > 1e-9)
        throw std::invalid_argument(
            "torus_coherent: I0 must lie on the momentum grid (multiple of hbar)");
    // Truncate the image sum where the Gaussian tail drops below 1e-14.
    const int w_max =
        static_cast<int>(std::ceil((sigma * std::sqrt(4.0 * std::log(1e14)) + kPi) /
                                   (2.0 * kPi))) + 1;
    Vector psi(p.n);
    for (int i = 0; i < p.n; ++i) {
        const double dtheta =
            std::remainder(p.theta_grid[i] - theta0, 2.0 * kPi);
        cxd amp = 0.0;
        for (int w = -w_max; w <= w_max; ++w) {
            const double x = dtheta + 2.0 * kPi * w;
            amp += std::exp(-x * x / (4.0 * sigma * sigma)) *
                   std::exp(kI * (i0 * (theta0 + x) / p.hbar));
        }
        psi[i] = amp;
    }
    psi /= psi.norm();
    return psi;
}

}  // namespace qk
