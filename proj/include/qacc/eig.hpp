#pragma once

#include "qacc/complex_matrix.hpp"

#include <vector>

namespace qacc {

struct EigenSystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // columns aligned with values
};

// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
// rotations. Input must be Hermitian within 1e-10 (throws otherwise).
// Converges when the off-diagonal Frobenius norm drops to 1e-13,
// capped at 100 sweeps.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// Sum of singular values, computed as the square roots of the eigenvalues
// of the smaller-side Gram matrix. Negative rounding artifacts above
// -1e-12 are clipped to zero.
double trace_norm(const ComplexMatrix& m);

}  // namespace qacc
