#ifndef QK_TYPES_HPP
#define QK_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qk {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cxd kI{0.0, 1.0};

// Tolerance ladder: unitarity/norms at 1e-12, eigendecomposition residuals
// and Hermiticity checks at 1e-10.
inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermTol = 1e-10;

// Largest dense dimension a kron result may have.
inline constexpr Eigen::Index kMaxKronDim = 8192;

// Invariant breach at runtime (maps to exit code 3 in the CLI).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Decay/rate fit could not be performed (exit code 4 outside sweeps).
struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid configuration; carries the full list of problems found.
struct ConfigError : std::runtime_error {
    std::vector<std::string> issues;
    explicit ConfigError(std::vector<std::string> list)
        : std::runtime_error(join(list)), issues(std::move(list)) {}
    explicit ConfigError(const std::string& one)
        : ConfigError(std::vector<std::string>{one}) {}

  private:
    static std::string join(const std::vector<std::string>& list) {
        std::string s = "config error";
        for (const auto& e : list) s += "\n  - " + e;
        return s;
    }
};

}  // namespace qk

#endif
