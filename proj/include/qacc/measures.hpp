#pragma once

#include "qacc/density_matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace qacc {

struct MeasureConventions {
    // Dimension used in the concurrence prefactor sqrt(2/(m(m-1))).
    // Defaults to min(dim_a, dim_b) of the measured state.
    std::optional<std::size_t> m_override;
};

// C = max{0, sqrt(2/(m(m-1))) * (max{||rho^T||, ||rho^R||} - 1)} where
// rho^T is the partial transpose and rho^R the realignment.
double concurrence(const DensityMatrix& rho, const MeasureConventions& conv = {});

// S(diag(rho)) - S(rho), in bits.
double rel_entropy_coherence(const DensityMatrix& rho);

// Von Neumann entropy S(rho) = -sum lambda log2 lambda, in bits.
double nonlocal_information(const DensityMatrix& rho);

// True iff the minimum eigenvalue of the partial transpose is >= -1e-10.
bool is_ppt(const DensityMatrix& rho);

// Trace norm of the realignment, ||rho^R||; values above 1 certify
// entanglement.
double ccnr_value(const DensityMatrix& rho);

// -sum p log2 p over a probability vector. Entries in [-1e-12, 0) are
// treated as zero; anything more negative is rejected as invalid.
double entropy_bits(const std::vector<double>& probabilities);

// S of the diagonal part of rho, in bits.
double diagonal_entropy_bits(const DensityMatrix& rho);

}  // namespace qacc
