#ifndef QK_PERTURBATION_HPP
#define QK_PERTURBATION_HPP

#include <vector>

#include "qk/evolution.hpp"
#include "qk/propagator.hpp"
#include "qk/types.hpp"

namespace qk {

// Covariances of free-evolved coupling operators,
// C[a,b](l,m) = <q_a(l) q_b(m)> - <q_a(l)><q_b(m)>, q(l) = (U^l)+ q U^l,
// expectations in the uncoupled subsystem's initial state. 1-based l, m.
struct CorrelationTensor {
    int n_ops = 0;
    int t_max = 0;
    std::vector<Matrix> c;  // (a*n_ops + b) -> t_max x t_max block

    const cxd& at(int a, int b, int l, int m) const {
        return c[static_cast<size_t>(a) * n_ops + b](l - 1, m - 1);
    }
};

CorrelationTensor heisenberg_correlations(const Propagator& u,
                                          const std::vector<Matrix>& q_ops,
                                          const Vector& psi0, int t_max);

// D(l,m) = sum_{a,b} C1[a,b](l,m) * C2[a,b](l,m), plain product.
struct DMatrix {
    int t_max = 0;
    Matrix d;

    const cxd& at(int l, int m) const { return d(l - 1, m - 1); }
};

DMatrix d_matrix(const CorrelationTensor& c1, const CorrelationTensor& c2);

struct FitOptions {
    int l0 = 5;                 // transient prefix dropped from the l-average
    double noise_floor = 1e-3;  // relative to C_hat(0)
};

struct DecayFit {
    double d0 = 0.0;     // C_hat(0)
    double gamma = 0.0;  // per-step decay rate
    int s_min = 1, s_max = 0;
    double residual = 0.0;  // rms in log space
    int n_points = 0;
    std::vector<double> c_hat;  // diagonal averages, index = separation s
};

// Fits C_hat(s) = mean_l Re D(l, l+s) to D0 exp(-gamma s). Throws FitError
// when the decay cannot be established (non-chaotic dynamics).
DecayFit fit_decay(const DMatrix& d, const FitOptions& opts = {});

// S_PT(t) = (2 eps^2/hbar^2) * sum_{l,m<=t} D(l,m), t = 0..t_max.
EntropySeries s_pt_series(const DMatrix& d, double eps, double hbar);

struct RateFit {
    double slope = 0.0;
    double intercept = 0.0;
    int t_lo = 0, t_hi = 0;
    double r2 = 0.0;
    double slope_stderr = 0.0;
    int n_points = 0;
};

// Least-squares slope of S(t) over t in [ceil(5/gamma), first crossing of
// saturation_cap * s_inf]; s_inf <= 0 means "use series.s_inf".
RateFit production_rate(const EntropySeries& s, double gamma,
                        double saturation_cap = 0.2, double s_inf = -1.0);

double coth_prediction(double gamma0, double gamma);

// Everything the rate experiment reports for one (k, IC) run.
struct RateResult {
    double s0 = 0.0;      // 2 eps^2/hbar^2
    double gamma = 0.0;   // fitted decay rate
    double d0 = 0.0;
    double gamma0 = 0.0;  // s0 * d0
    RateFit exact_fit;    // slope of the exact series
    RateFit pt_fit;       // slope of the perturbative series
    double ratio = 0.0;   // exact slope / gamma0
    double ratio_predicted = 0.0;  // coth(gamma/2)
};

}  // namespace qk

#endif
