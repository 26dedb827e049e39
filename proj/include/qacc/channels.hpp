#pragma once

#include "qacc/density_matrix.hpp"

#include <vector>

namespace qacc {

// Decoherence probability, valid on [0, 1].
class NoiseStrength {
public:
    explicit NoiseStrength(double gamma);
    double value() const { return gamma_; }

private:
    double gamma_;
};

enum class ChannelKind { Dephasing, AmplitudeDamping };
enum class Locality { None, MultiLocal, Global };
enum class GlobalMode { LiteralRenormalized, Composed };

const char* to_string(ChannelKind k);
const char* to_string(Locality l);
const char* to_string(GlobalMode m);

struct KrausChannel {
    ChannelKind kind;
    double gamma = 0.0;
    std::size_t local_dim = 3;
    std::vector<ComplexMatrix> operators;

    // max entrywise |sum E†E - I|
    double completeness_drift() const;
};

// E1 = diag(1, sqrt(1-g), sqrt(1-g)), E2 = diag(0, sqrt(g), 0),
// E3 = diag(0, 0, sqrt(g)).
KrausChannel dephasing_kraus(NoiseStrength gamma);

// E1 = diag(1, sqrt(1-g), sqrt(1-g)), E2 = sqrt(g)|0><1|, E3 = sqrt(g)|0><2|.
KrausChannel amplitude_damping_kraus(NoiseStrength gamma);

// Extends a qutrit channel to the 4-level accelerated basis {0,1,2,P}:
// E1 gains a unit entry at (P,P), the damping operators gain zero rows and
// columns. This is the minimal extension that keeps the channel complete
// while leaving the pair level untouched.
KrausChannel extend_to_acc_space(const KrausChannel& ch);

// rho' = sum_{ij} (E_i (x) F_j) rho (E_i (x) F_j)†. Trace preserving.
DensityMatrix apply_multilocal(const DensityMatrix& rho, const KrausChannel& ch_a,
                               const KrausChannel& ch_b);

struct GlobalResult {
    DensityMatrix state;
    double pre_norm_trace = 1.0;
};

// Correlated channel. LiteralRenormalized sums the operators
// (E_i E_j) (x) (E_i E_k) over all i,j,k; that sum is not trace preserving,
// so the output is renormalized and the pre-normalization trace reported.
// Composed instead applies the correlated layer sum_i (E_i (x) E_i) after
// independent local copies of the channel, again renormalized.
GlobalResult apply_global(const DensityMatrix& rho, const KrausChannel& ch,
                          GlobalMode mode = GlobalMode::LiteralRenormalized);

}  // namespace qacc
