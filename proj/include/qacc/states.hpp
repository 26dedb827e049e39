#pragma once

#include "qacc/density_matrix.hpp"

namespace qacc {

// State-family weight, valid on [2, 5].
class AlphaParameter {
public:
    explicit AlphaParameter(double value);
    double value() const { return value_; }

private:
    double value_;
};

enum class EntanglementClass { Separable, BoundEntangled, FreeEntangled };

const char* to_string(EntanglementClass c);

// Two-qutrit family rho(alpha) = (2/7) |psi><psi| + (alpha/7) sigma_plus
// + ((5-alpha)/7) sigma_minus. Convention: the maximally entangled
// component |psi> = (|01> + |10> + |22>)/sqrt(3); sigma_plus mixes
// {|00>,|12>,|21>} and sigma_minus mixes {|02>,|11>,|20>}.
DensityMatrix horodecki_state(AlphaParameter alpha);

// Projector onto (1/sqrt(d)) sum_i |ii>, shape d x d. Requires d >= 2.
DensityMatrix max_entangled(std::size_t d);

// Separable on [2,3], bound entangled on (3,4], free entangled on (4,5].
EntanglementClass classify(AlphaParameter alpha);

}  // namespace qacc
