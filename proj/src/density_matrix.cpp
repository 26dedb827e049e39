#include "qacc/density_matrix.hpp"

#include "qacc/eig.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qacc {

DensityMatrix::DensityMatrix(ComplexMatrix m, BipartiteShape shape)
    : m_(std::move(m)), shape_(shape) {
    if (m_.rows() != m_.cols() || shape_.total() != m_.rows())
        throw std::invalid_argument("DensityMatrix: matrix does not match the bipartite shape");
    if (m_.hermiticity_drift() > kHermTol)
        throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-12");
    if (std::abs(m_.trace() - cplx(1.0)) > kTraceTol)
        throw std::invalid_argument("DensityMatrix: trace differs from 1 by more than 1e-12");
    const auto values = hermitian_eigenvalues(m_);
    min_eig_ = values.back();
    if (min_eig_ < kMinEigFloor)
        throw std::invalid_argument("DensityMatrix: eigenvalue below -1e-10");
}

ComplexMatrix partial_trace(const DensityMatrix& rho, Subsystem traced) {
    return partial_trace(rho.matrix(), rho.shape(), traced);
}

ComplexMatrix partial_transpose(const DensityMatrix& rho) {
    return partial_transpose(rho.matrix(), rho.shape());
}

ComplexMatrix realign(const DensityMatrix& rho) {
    return realign(rho.matrix(), rho.shape());
}

}  // namespace qacc
