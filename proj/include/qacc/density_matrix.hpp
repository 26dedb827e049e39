#pragma once

#include "qacc/tensor.hpp"

namespace qacc {

// A validated quantum state: square, Hermitian within 1e-12, unit trace
// within 1e-12, minimum eigenvalue >= -1e-10. Construction rejects
// anything else.
class DensityMatrix {
public:
    static constexpr double kHermTol = 1e-12;
    static constexpr double kTraceTol = 1e-12;
    static constexpr double kMinEigFloor = -1e-10;

    DensityMatrix(ComplexMatrix m, BipartiteShape shape);

    const ComplexMatrix& matrix() const { return m_; }
    BipartiteShape shape() const { return shape_; }
    std::size_t dim() const { return m_.rows(); }
    double min_eigenvalue() const { return min_eig_; }

private:
    ComplexMatrix m_;
    BipartiteShape shape_;
    double min_eig_ = 0.0;
};

ComplexMatrix partial_trace(const DensityMatrix& rho, Subsystem traced);
ComplexMatrix partial_transpose(const DensityMatrix& rho);
ComplexMatrix realign(const DensityMatrix& rho);

}  // namespace qacc
