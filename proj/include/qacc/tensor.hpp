#pragma once

#include "qacc/complex_matrix.hpp"

namespace qacc {

// Local dimensions of a bipartite system. Composite basis ordering is fixed
// throughout: |ab> maps to index a*dim_b + b.
struct BipartiteShape {
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    std::size_t total() const { return dim_a * dim_b; }
};

enum class Subsystem { A, B };

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Traces out the selected subsystem and returns the reduced matrix of the
// other one. Trace is preserved.
ComplexMatrix partial_trace(const ComplexMatrix& m, BipartiteShape shape, Subsystem traced);

// Transposes subsystem A: out[(i,j),(k,l)] = m[(k,j),(i,l)].
ComplexMatrix partial_transpose(const ComplexMatrix& m, BipartiteShape shape);

// Realignment: out[i*dim_a + j, k*dim_b + l] = m[(i,k),(j,l)].
// Output has dimensions dim_a^2 x dim_b^2.
ComplexMatrix realign(const ComplexMatrix& m, BipartiteShape shape);

}  // namespace qacc
