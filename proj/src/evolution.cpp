#include "qk/evolution.hpp"

namespace qk {

BipartiteState BipartiteState::product(const Vector& a, const Vector& b) {
    if (a.size() == 0 || b.size() == 0)
        throw std::invalid_argument("BipartiteState: empty factor");
    BipartiteState s;
    s.coeffs = a * b.transpose();
    const double nrm = s.coeffs.norm();
    if (std::abs(nrm - 1.0) > 1e-9)
        throw NumericalError("BipartiteState: product of non-normalized factors");
    s.coeffs /= nrm;
    return s;
}

Eigen::ArrayXXcd coupling_grid(const Vector& phases, int d1, int d2) {
    if (phases.size() != static_cast<Eigen::Index>(d1) * d2)
        throw std::invalid_argument("coupling_grid: length mismatch");
    Eigen::ArrayXXcd grid(d1, d2);
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d2; ++j) grid(i, j) = phases[static_cast<Eigen::Index>(i) * d2 + j];
    return grid;
}

FloquetSystem make_top_pair(const TopParams& p1, const TopParams& p2, double eps) {
    FloquetSystem sys;
    sys.kind = SystemKind::Top;
    sys.eps = eps;
    sys.hbar = p1.hbar;
    sys.u1 = std::make_shared<DensePropagator>(top_floquet(p1));
    sys.u2 = std::make_shared<DensePropagator>(top_floquet(p2));
    sys.coupling = coupling_grid(top_coupling(p1, p2, eps), p1.dim(), p2.dim());
    sys.factors = top_coupling_factors(p1);
    return sys;
}

FloquetSystem make_rotor_pair(const RotorParams& p1, const RotorParams& p2,
                              double eps) {
    if (p1.n != p2.n)
        throw std::invalid_argument("make_rotor_pair: subsystems must share N");
    FloquetSystem sys;
    sys.kind = SystemKind::Rotor;
    sys.eps = eps;
    sys.hbar = p1.hbar;
    sys.u1 = std::make_shared<SplitStepPropagator>(p1);
    sys.u2 = std::make_shared<SplitStepPropagator>(p2);
    sys.coupling = coupling_grid(rotor_coupling_phases(p1, eps), p1.n, p2.n);
    sys.factors = rotor_coupling_factors(p1);
    return sys;
}

void step(const FloquetSystem& sys, BipartiteState& psi) {
    if (psi.d1() != sys.d1() || psi.d2() != sys.d2())
        throw std::invalid_argument("step: state/system dimension mismatch");
    sys.u1->apply_left(psi.coeffs);
    sys.u2->apply_right(psi.coeffs);
    psi.coeffs.array() *= sys.coupling;
    ++psi.t;
}

ReducedDensity reduced_density(const BipartiteState& psi) {
    const double nrm = psi.norm();
    if (std::abs(nrm - 1.0) > 1e-9)
        throw NumericalError("reduced_density: state norm drifted beyond 1e-9");
    ReducedDensity rd;
    rd.rho = Matrix::Zero(psi.d1(), psi.d1());
    rd.rho.selfadjointView<Eigen::Lower>().rankUpdate(psi.coeffs);
    rd.rho.triangularView<Eigen::StrictlyUpper>() =
        rd.rho.adjoint().triangularView<Eigen::StrictlyUpper>();
    return rd;
}

namespace {

double clamp_entropy(double s, double s_max) {
    if (s < -1e-10 || s > s_max + 1e-10)
        throw NumericalError("linear entropy outside [0, 1-1/d]: " + std::to_string(s));
    return std::min(std::max(s, 0.0), s_max);
}

}  // namespace

double linear_entropy(const ReducedDensity& rd) {
    const int d = rd.dim();
    if (d < 1) throw std::invalid_argument("linear_entropy: empty density matrix");
    if ((rd.rho - rd.rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
        throw NumericalError("linear_entropy: density matrix not Hermitian");
    if (std::abs(rd.rho.trace().real() - 1.0) > 1e-9 ||
        std::abs(rd.rho.trace().imag()) > 1e-10)
        throw NumericalError("linear_entropy: trace deviates from 1");
    if (rd.rho.diagonal().real().minCoeff() < -1e-10)
        throw NumericalError("linear_entropy: negative population");
    return clamp_entropy(1.0 - rd.rho.squaredNorm(), 1.0 - 1.0 / d);
}

double purity(const BipartiteState& psi) {
    // Tr(rho1^2) = ||C^H C||_F^2 = ||C C^H||_F^2; use the smaller Gram matrix.
    const Matrix& c = psi.coeffs;
    Matrix g;
    if (c.rows() <= c.cols()) {
        g = Matrix::Zero(c.rows(), c.rows());
        g.selfadjointView<Eigen::Lower>().rankUpdate(c);
    } else {
        g = Matrix::Zero(c.cols(), c.cols());
        g.selfadjointView<Eigen::Lower>().rankUpdate(c.adjoint());
    }
    // rankUpdate fills the lower triangle only
    double sum = 0.0;
    for (Eigen::Index col = 0; col < g.cols(); ++col) {
        sum += std::norm(g(col, col));
        for (Eigen::Index row = col + 1; row < g.rows(); ++row)
            sum += 2.0 * std::norm(g(row, col));
    }
    return sum;
}

EntropySeries evolve_series(const FloquetSystem& sys, BipartiteState psi, int t_max,
                            int stride) {
    if (t_max < 1) throw std::invalid_argument("evolve_series: need t_max >= 1");
    if (stride < 1) throw std::invalid_argument("evolve_series: stride must be >= 1");
    EntropySeries series;
    const int dmin = std::min(psi.d1(), psi.d2());
    series.s_inf = 1.0 - 1.0 / dmin;
    series.times.reserve(t_max / stride + 1);
    series.values.reserve(t_max / stride + 1);
    series.times.push_back(psi.t);
    series.values.push_back(clamp_entropy(1.0 - purity(psi), series.s_inf));
    for (int t = 1; t <= t_max; ++t) {
        step(sys, psi);
        if (t % stride == 0 || t == t_max) {
            series.times.push_back(psi.t);
            series.values.push_back(clamp_entropy(1.0 - purity(psi), series.s_inf));
        }
    }
    return series;
}

void evolve_steps(const FloquetSystem& sys, BipartiteState& psi, int n) {
    for (int i = 0; i < n; ++i) step(sys, psi);
}

}  // namespace qk
