#include "qacc/states.hpp"

#include <stdexcept>

namespace qacc {

AlphaParameter::AlphaParameter(double value) : value_(value) {
    if (!(value >= 2.0 && value <= 5.0))
        throw std::invalid_argument("AlphaParameter: value must lie in [2, 5]");
}

const char* to_string(EntanglementClass c) {
    switch (c) {
        case EntanglementClass::Separable: return "separable";
        case EntanglementClass::BoundEntangled: return "bound-entangled";
        case EntanglementClass::FreeEntangled: return "free-entangled";
    }
    return "unknown";
}

DensityMatrix horodecki_state(AlphaParameter alpha) {
    const double a = alpha.value();
    ComplexMatrix m(9, 9);
    // Entangled block: projector onto (|01> + |10> + |22>)/sqrt(3),
    // weight 2/7, i.e. 2/21 on every index pair drawn from {1, 3, 8}.
    const std::size_t psi[3] = {1, 3, 8};  // |01>, |10>, |22>
    for (std::size_t i : psi)
        for (std::size_t j : psi) m(i, j) = 2.0 / 21.0;
    // sigma_plus on {|00>, |12>, |21>} with weight alpha/7.
    m(0, 0) = a / 21.0;
    m(5, 5) = a / 21.0;
    m(7, 7) = a / 21.0;
    // sigma_minus on {|02>, |11>, |20>} with weight (5 - alpha)/7.
    m(2, 2) = (5.0 - a) / 21.0;
    m(4, 4) = (5.0 - a) / 21.0;
    m(6, 6) = (5.0 - a) / 21.0;
    return DensityMatrix(std::move(m), {3, 3});
}

DensityMatrix max_entangled(std::size_t d) {
    if (d < 2) throw std::invalid_argument("max_entangled: dimension must be at least 2");
    ComplexMatrix m(d * d, d * d);
    const double w = 1.0 / static_cast<double>(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i * d + i, j * d + j) = w;
    return DensityMatrix(std::move(m), {d, d});
}

EntanglementClass classify(AlphaParameter alpha) {
    const double a = alpha.value();
    if (a <= 3.0) return EntanglementClass::Separable;
    if (a <= 4.0) return EntanglementClass::BoundEntangled;
    return EntanglementClass::FreeEntangled;
}

}  // namespace qacc
