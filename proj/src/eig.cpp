#include "qacc/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qacc {

namespace {

double offdiag_norm(const ComplexMatrix& h) {
    double s = 0.0;
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (i != j) s += std::norm(h(i, j));
    return std::sqrt(s);
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("hermitian_eigensystem: matrix must be square");
    if (m.hermiticity_drift() > 1e-10)
        throw std::invalid_argument("hermitian_eigensystem: matrix is not Hermitian within 1e-10");

    const std::size_t n = m.rows();
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    ComplexMatrix v = ComplexMatrix::identity(n);

    constexpr double kOffTol = 1e-13;
    int sweeps = 0;
    while (n > 1 && offdiag_norm(h) > kOffTol) {
        if (++sweeps > 100)
            throw std::runtime_error("hermitian_eigensystem: Jacobi did not converge in 100 sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx b = h(p, q);
                const double ab = std::abs(b);
                if (ab < 1e-300) continue;
                const cplx phase = b / ab;
                const double tau = (h(q, q).real() - h(p, p).real()) / (2.0 * ab);
                const double sign = tau >= 0.0 ? 1.0 : -1.0;
                const double t = sign / (std::abs(tau) + std::hypot(1.0, tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cplx w = t * c * phase;  // rotation entry J(p,q)

                // h <- J† h J, v <- v J with the plane rotation
                // J(p,p) = J(q,q) = c, J(p,q) = w, J(q,p) = -conj(w).
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx hp = h(k, p), hq = h(k, q);
                    h(k, p) = c * hp - std::conj(w) * hq;
                    h(k, q) = w * hp + c * hq;
                    const cplx vp = v(k, p), vq = v(k, q);
                    v(k, p) = c * vp - std::conj(w) * vq;
                    v(k, q) = w * vp + c * vq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx hp = h(p, k), hq = h(q, k);
                    h(p, k) = c * hp - w * hq;
                    h(q, k) = std::conj(w) * hp + c * hq;
                }
                h(p, q) = 0.0;
                h(q, p) = 0.0;
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return h(a, a).real() > h(b, b).real();
    });

    EigenSystem out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = h(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    return hermitian_eigensystem(m).values;
}

double trace_norm(const ComplexMatrix& m) {
    const ComplexMatrix gram = m.cols() > m.rows() ? m * m.adjoint() : m.adjoint() * m;
    double sum = 0.0;
    for (double lambda : hermitian_eigenvalues(gram)) {
        if (lambda < 0.0) {
            if (lambda < -1e-12)
                throw std::runtime_error("trace_norm: Gram eigenvalue below -1e-12");
            lambda = 0.0;
        }
        sum += std::sqrt(lambda);
    }
    return sum;
}

}  // namespace qacc
