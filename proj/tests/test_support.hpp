// Deterministic generators for property-style tests. Every test seeds its own
// engine so cases stay order-independent.
#pragma once

#include "qacc/complex_matrix.hpp"
#include "qacc/density_matrix.hpp"
#include "qacc/tensor.hpp"

#include <cmath>
#include <random>

namespace qacc::testing {

inline ComplexMatrix random_complex(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::normal_distribution<double> dist(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = cplx(dist(rng), dist(rng));
    return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
    ComplexMatrix g = random_complex(rng, n, n);
    ComplexMatrix h = g + g.adjoint();
    h *= cplx(0.5);
    return h;
}

inline DensityMatrix random_density(std::mt19937_64& rng, BipartiteShape shape) {
    const ComplexMatrix g = random_complex(rng, shape.total(), shape.total());
    ComplexMatrix rho = g * g.adjoint();
    rho *= cplx(1.0 / rho.trace().real());
    return DensityMatrix(rho, shape);
}

inline ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t n) {
    ComplexMatrix g = random_complex(rng, n, n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            cplx overlap(0.0, 0.0);
            for (std::size_t r = 0; r < n; ++r) overlap += std::conj(g(r, prev)) * g(r, c);
            for (std::size_t r = 0; r < n; ++r) g(r, c) -= overlap * g(r, prev);
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < n; ++r) norm += std::norm(g(r, c));
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < n; ++r) g(r, c) *= cplx(1.0 / norm);
    }
    return g;
}

inline ComplexMatrix random_pure_projector(std::mt19937_64& rng, std::size_t dim) {
    const ComplexMatrix v = random_complex(rng, dim, 1);
    double norm = 0.0;
    for (std::size_t i = 0; i < dim; ++i) norm += std::norm(v(i, 0));
    ComplexMatrix proj(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) proj(i, j) = v(i, 0) * std::conj(v(j, 0)) / norm;
    return proj;
}

// Convex mixture of product states, so always separable by construction.
inline DensityMatrix random_separable(std::mt19937_64& rng, BipartiteShape shape,
                                      std::size_t terms = 12) {
    std::uniform_real_distribution<double> weight(0.1, 1.0);
    ComplexMatrix rho(shape.total(), shape.total());
    double total = 0.0;
    for (std::size_t k = 0; k < terms; ++k) {
        const double w = weight(rng);
        total += w;
        const ComplexMatrix term =
            kron(random_pure_projector(rng, shape.dim_a), random_pure_projector(rng, shape.dim_b));
        for (std::size_t i = 0; i < shape.total(); ++i)
            for (std::size_t j = 0; j < shape.total(); ++j) rho(i, j) += cplx(w) * term(i, j);
    }
    rho *= cplx(1.0 / total);
    return DensityMatrix(rho, shape);
}

}  // namespace qacc::testing
