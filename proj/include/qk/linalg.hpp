#ifndef QK_LINALG_HPP
#define QK_LINALG_HPP

#include "qk/types.hpp"

namespace qk {

// max |(U^H U - I)_{ij}|; a matrix counts as unitary below kUnitaryTol.
double unitarity_defect(const Matrix& u);

// max |(H - H^H)_{ij}|
double hermiticity_defect(const Matrix& h);

bool is_unitary(const Matrix& u, double tol = kUnitaryTol);

// Kronecker product A (x) B. Rejects results larger than kMaxKronDim on
// either axis (infeasible dense problem size).
Matrix kron(const Matrix& a, const Matrix& b);

struct HermitianEig {
    RealVector eigenvalues;  // ascending
    Matrix vectors;          // unitary, columns are eigenvectors
};

// Rejects input with hermiticity defect >= 1e-10.
HermitianEig hermitian_eig(const Matrix& h);

// exp(-i s H) for Hermitian H, via eigendecomposition.
Matrix unitary_exp(const Matrix& h, double s);

}  // namespace qk

#endif
