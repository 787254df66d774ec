#include "qk/propagator.hpp"

#include "qk/dft.hpp"
#include "qk/linalg.hpp"

namespace qk {

DensePropagator::DensePropagator(Matrix u) : u_(std::move(u)) {
    if (u_.rows() != u_.cols())
        throw std::invalid_argument("DensePropagator: matrix not square");
}

void DensePropagator::apply(Vector& psi) const { psi = u_ * psi; }

void DensePropagator::apply_left(Matrix& coeffs) const { coeffs = u_ * coeffs; }

void DensePropagator::apply_right(Matrix& coeffs) const {
    coeffs = coeffs * u_.transpose();
}

double DensePropagator::unitarity_defect() const {
    return qk::unitarity_defect(u_);
}

SplitStepPropagator::SplitStepPropagator(const RotorParams& params)
    : params_(params),
      kick_(rotor_kick_phases(params)),
      free_(rotor_free_phases(params)) {}

void SplitStepPropagator::apply(Vector& psi) const {
    if (psi.size() != params_.n)
        throw std::invalid_argument("SplitStepPropagator: dimension mismatch");
    psi.array() *= kick_.array();
    dft_inplace(psi.data(), params_.n, FftDir::Forward);
    psi.array() *= free_.array();
    dft_inplace(psi.data(), params_.n, FftDir::Inverse);
}

void SplitStepPropagator::apply_left(Matrix& coeffs) const {
    if (coeffs.rows() != params_.n)
        throw std::invalid_argument("SplitStepPropagator: dimension mismatch");
    const int n = params_.n;
    const int cols = static_cast<int>(coeffs.cols());
    coeffs.array().colwise() *= kick_.array();
    // column-major: each column is contiguous
    dft_batch_inplace(coeffs.data(), n, cols, 1, n, FftDir::Forward);
    coeffs.array().colwise() *= free_.array();
    dft_batch_inplace(coeffs.data(), n, cols, 1, n, FftDir::Inverse);
}

void SplitStepPropagator::apply_right(Matrix& coeffs) const {
    if (coeffs.cols() != params_.n)
        throw std::invalid_argument("SplitStepPropagator: dimension mismatch");
    const int n = params_.n;
    const int rows = static_cast<int>(coeffs.rows());
    coeffs.array().rowwise() *= kick_.transpose().array();
    dft_batch_inplace(coeffs.data(), n, rows, rows, 1, FftDir::Forward);
    coeffs.array().rowwise() *= free_.transpose().array();
    dft_batch_inplace(coeffs.data(), n, rows, rows, 1, FftDir::Inverse);
}

Matrix SplitStepPropagator::dense() const {
    Matrix u = Matrix::Identity(params_.n, params_.n);
    for (int c = 0; c < params_.n; ++c) {
        Vector col = u.col(c);
        apply(col);
        u.col(c) = col;
    }
    return u;
}

double SplitStepPropagator::unitarity_defect() const {
    double defect = 0.0;
    for (int i = 0; i < params_.n; ++i) {
        defect = std::max(defect, std::abs(std::abs(kick_[i]) - 1.0));
        defect = std::max(defect, std::abs(std::abs(free_[i]) - 1.0));
    }
    return defect;
}

}  // namespace qk
