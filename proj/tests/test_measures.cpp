#include "qacc/channels.hpp"
#include "qacc/eig.hpp"
#include "qacc/measures.hpp"
#include "qacc/rindler.hpp"
#include "qacc/states.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace qacc;

namespace {

DensityMatrix benchmark_state() {
    return accelerate(horodecki_state(AlphaParameter(4.5)), AccelerationParameter(0.3),
                      AccelerationParameter(0.3));
}

}  // namespace

TEST_CASE("entropy of probability vectors") {
    CHECK(entropy_bits({1.0}) == 0.0);
    CHECK(entropy_bits({0.5, 0.5}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(entropy_bits(std::vector<double>(9, 1.0 / 9.0)) ==
          doctest::Approx(3.169925001442312).epsilon(1e-14));
    CHECK(entropy_bits({1.0, -5e-13}) == 0.0);
    CHECK_THROWS_AS(entropy_bits({1.0, -1e-6}), std::invalid_argument);
}

TEST_CASE("shared information anchors") {
    CHECK(std::abs(nonlocal_information(max_entangled(3))) < 1e-10);

    ComplexMatrix mixed = ComplexMatrix::identity(9);
    mixed *= cplx(1.0 / 9.0);
    CHECK(nonlocal_information(DensityMatrix(mixed, {3, 3})) ==
          doctest::Approx(std::log2(9.0)).epsilon(1e-12));

    CHECK(nonlocal_information(horodecki_state(AlphaParameter(5.0))) ==
          doctest::Approx(1.995236640510315).epsilon(1e-10));

    const DensityMatrix far = accelerate(horodecki_state(AlphaParameter(2.0)),
                                         AccelerationParameter(0.78539816339744830961),
                                         AccelerationParameter(0.78539816339744830961));
    CHECK(nonlocal_information(far) == doctest::Approx(3.5960474411735905).epsilon(1e-9));
}

TEST_CASE("coherence is basis-diagonal entropy minus total entropy") {
    for (double a : {2.0, 3.7, 5.0})
        CHECK(rel_entropy_coherence(horodecki_state(AlphaParameter(a))) ==
              doctest::Approx(0.45284642877747316).epsilon(1e-10));

    ComplexMatrix diag(9, 9);
    for (std::size_t i = 0; i < 9; ++i) diag(i, i) = cplx(1.0 / 9.0);
    CHECK(std::abs(rel_entropy_coherence(DensityMatrix(diag, {3, 3}))) < 1e-12);

    CHECK(rel_entropy_coherence(benchmark_state()) ==
          doctest::Approx(0.2848821480349546).epsilon(1e-9));
}

TEST_CASE("concurrence anchors and dimension conventions") {
    CHECK(concurrence(max_entangled(2)) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(concurrence(max_entangled(3)) ==
          doctest::Approx(1.154700538379252).epsilon(1e-9));

    ComplexMatrix mixed = ComplexMatrix::identity(4);
    mixed *= cplx(0.25);
    CHECK(concurrence(DensityMatrix(mixed, {2, 2})) == 0.0);

    const DensityMatrix acc = benchmark_state();
    const double c4 = concurrence(acc);
    CHECK(std::abs(c4 - 0.0035641151340990557) < 5e-7);

    MeasureConventions conv;
    conv.m_override = 3;
    const double c3 = concurrence(acc, conv);
    CHECK(std::abs(c3 - 0.005040419960502087) < 5e-7);
    CHECK(c3 == doctest::Approx(c4 * std::sqrt(2.0)).epsilon(1e-9));

    conv.m_override = 1;
    CHECK_THROWS_AS(concurrence(acc, conv), std::invalid_argument);
}

TEST_CASE("concurrence vanishes on random separable mixtures") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const DensityMatrix rho = testing::random_separable(rng, {3, 3});
        CHECK(concurrence(rho) <= 1e-9);
    }
}

TEST_CASE("concurrence is invariant under local unitaries") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 5; ++trial) {
        const DensityMatrix rho = testing::random_density(rng, {2, 2});
        const ComplexMatrix u = kron(testing::random_unitary(rng, 2),
                                     testing::random_unitary(rng, 2));
        const DensityMatrix rotated(u * rho.matrix() * u.adjoint(), {2, 2});
        CHECK(std::abs(concurrence(rotated) - concurrence(rho)) < 1e-8);
    }
}

TEST_CASE("transpose and realignment norms on the benchmark state") {
    const DensityMatrix acc = benchmark_state();
    CHECK(std::abs(trace_norm(partial_transpose(acc)) - 1.008730263463074) < 5e-7);
    CHECK(std::abs(ccnr_value(acc) - 0.9981833505123925) < 5e-7);
    CHECK(ccnr_value(max_entangled(3)) == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("positivity of the partial transpose as a predicate") {
    CHECK(is_ppt(horodecki_state(AlphaParameter(3.5))));
    CHECK(is_ppt(horodecki_state(AlphaParameter(4.0))));
    CHECK_FALSE(is_ppt(horodecki_state(AlphaParameter(4.5))));
    CHECK_FALSE(is_ppt(max_entangled(2)));
}

TEST_CASE("measures stay finite and non-negative on random states") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix rho = testing::random_density(rng, {3, 3});
        CHECK(rel_entropy_coherence(rho) >= -1e-12);
        CHECK(nonlocal_information(rho) >= 0.0);
        CHECK(concurrence(rho) >= 0.0);
        CHECK(ccnr_value(rho) > 0.0);
    }
}

TEST_CASE("noisy pipeline values stay pinned") {
    const DensityMatrix acc = benchmark_state();

    const KrausChannel deph = extend_to_acc_space(dephasing_kraus(NoiseStrength(0.4)));
    const DensityMatrix ml_deph = apply_multilocal(acc, deph, deph);
    CHECK(rel_entropy_coherence(ml_deph) ==
          doctest::Approx(0.07016272047585259).epsilon(1e-9));
    CHECK(nonlocal_information(ml_deph) == doctest::Approx(3.317953678410636).epsilon(1e-9));

    const GlobalResult global_deph = apply_global(acc, deph);
    CHECK(rel_entropy_coherence(global_deph.state) ==
          doctest::Approx(0.06002561518668914).epsilon(1e-9));
    CHECK(nonlocal_information(global_deph.state) ==
          doctest::Approx(3.3655897496727465).epsilon(1e-9));

    const KrausChannel damp = extend_to_acc_space(amplitude_damping_kraus(NoiseStrength(0.4)));
    const DensityMatrix ml_damp = apply_multilocal(acc, damp, damp);
    CHECK(rel_entropy_coherence(ml_damp) ==
          doctest::Approx(0.08335293499435092).epsilon(1e-9));
}
