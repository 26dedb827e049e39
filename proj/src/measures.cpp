#include "qacc/measures.hpp"

#include "qacc/eig.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qacc {

double entropy_bits(const std::vector<double>& probabilities) {
    double s = 0.0;
    for (double p : probabilities) {
        if (p < 0.0) {
            if (p < -1e-12)
                throw std::invalid_argument("entropy_bits: probability below -1e-12");
            continue;
        }
        if (p > 0.0) s -= p * std::log2(p);
    }
    return s;
}

double diagonal_entropy_bits(const DensityMatrix& rho) {
    std::vector<double> probs(rho.dim());
    for (std::size_t i = 0; i < rho.dim(); ++i) probs[i] = rho.matrix()(i, i).real();
    return entropy_bits(probs);
}

double concurrence(const DensityMatrix& rho, const MeasureConventions& conv) {
    const std::size_t m =
        conv.m_override.value_or(std::min(rho.shape().dim_a, rho.shape().dim_b));
    if (m < 2) throw std::invalid_argument("concurrence: prefactor dimension must be at least 2");
    const double prefactor = std::sqrt(2.0 / (static_cast<double>(m) * (m - 1.0)));
    const double norm_t = trace_norm(partial_transpose(rho));
    const double norm_r = trace_norm(realign(rho));
    return std::max(0.0, prefactor * (std::max(norm_t, norm_r) - 1.0));
}

double rel_entropy_coherence(const DensityMatrix& rho) {
    return diagonal_entropy_bits(rho) - nonlocal_information(rho);
}

double nonlocal_information(const DensityMatrix& rho) {
    return entropy_bits(hermitian_eigenvalues(rho.matrix()));
}

bool is_ppt(const DensityMatrix& rho) {
    const auto values = hermitian_eigenvalues(partial_transpose(rho));
    return values.back() >= -1e-10;
}

double ccnr_value(const DensityMatrix& rho) { return trace_norm(realign(rho)); }

}  // namespace qacc
