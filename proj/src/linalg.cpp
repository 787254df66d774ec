#include "qk/linalg.hpp"

#include <Eigen/Eigenvalues>

namespace qk {

double unitarity_defect(const Matrix& u) {
    if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
    Matrix g = u.adjoint() * u;
    g.diagonal().array() -= 1.0;
    return g.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const Matrix& h) {
    if (h.rows() != h.cols()) return std::numeric_limits<double>::infinity();
    return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

bool is_unitary(const Matrix& u, double tol) { return unitarity_defect(u) < tol; }

Matrix kron(const Matrix& a, const Matrix& b) {
    const Eigen::Index rows = a.rows() * b.rows();
    const Eigen::Index cols = a.cols() * b.cols();
    if (a.rows() > 0 && b.rows() > 0 &&
        (rows > kMaxKronDim || cols > kMaxKronDim)) {
        throw std::invalid_argument("kron: result dimension " +
                                    std::to_string(rows) + "x" + std::to_string(cols) +
                                    " exceeds max " + std::to_string(kMaxKronDim));
    }
    Matrix out(rows, cols);
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

HermitianEig hermitian_eig(const Matrix& h) {
    if (h.rows() != h.cols())
        throw std::invalid_argument("hermitian_eig: matrix not square");
    if (hermiticity_defect(h) >= kHermTol)
        throw std::invalid_argument("hermitian_eig: input not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw NumericalError("hermitian_eig: eigensolver failed to converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix unitary_exp(const Matrix& h, double s) {
    const HermitianEig eig = hermitian_eig(h);
    Vector phases(eig.eigenvalues.size());
    for (Eigen::Index n = 0; n < phases.size(); ++n)
        phases[n] = std::exp(-kI * s * eig.eigenvalues[n]);
    return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

}  // namespace qk
