#include "qacc/tensor.hpp"

#include <stdexcept>

namespace qacc {

namespace {

void require_shape(const ComplexMatrix& m, BipartiteShape shape, const char* op) {
    if (shape.dim_a == 0 || shape.dim_b == 0 || m.rows() != m.cols() ||
        m.rows() != shape.total()) {
        throw std::invalid_argument(std::string(op) + ": matrix does not match the bipartite shape");
    }
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx av = a(i, j);
            if (av == cplx(0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = av * b(k, l);
        }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, BipartiteShape shape, Subsystem traced) {
    require_shape(m, shape, "partial_trace");
    const std::size_t da = shape.dim_a, db = shape.dim_b;
    if (traced == Subsystem::B) {
        ComplexMatrix out(da, da);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t k = 0; k < da; ++k)
                for (std::size_t b = 0; b < db; ++b) out(i, k) += m(i * db + b, k * db + b);
        return out;
    }
    ComplexMatrix out(db, db);
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t l = 0; l < db; ++l)
            for (std::size_t a = 0; a < da; ++a) out(j, l) += m(a * db + j, a * db + l);
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, BipartiteShape shape) {
    require_shape(m, shape, "partial_transpose");
    const std::size_t da = shape.dim_a, db = shape.dim_b;
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < da; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    out(i * db + j, k * db + l) = m(k * db + j, i * db + l);
    return out;
}

ComplexMatrix realign(const ComplexMatrix& m, BipartiteShape shape) {
    require_shape(m, shape, "realign");
    const std::size_t da = shape.dim_a, db = shape.dim_b;
    ComplexMatrix out(da * da, db * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    out(i * da + j, k * db + l) = m(i * db + k, j * db + l);
    return out;
}

}  // namespace qacc
