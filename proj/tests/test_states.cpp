#include "qacc/density_matrix.hpp"
#include "qacc/eig.hpp"
#include "qacc/states.hpp"
#include "qacc/tensor.hpp"

#include <doctest.h>

#include <cmath>

using namespace qacc;

TEST_CASE("alpha parameter domain") {
    CHECK_NOTHROW(AlphaParameter(2.0));
    CHECK_NOTHROW(AlphaParameter(5.0));
    CHECK_THROWS_AS(AlphaParameter(1.999), std::invalid_argument);
    CHECK_THROWS_AS(AlphaParameter(5.001), std::invalid_argument);
    CHECK_THROWS_AS(AlphaParameter(std::nan("")), std::invalid_argument);
}

TEST_CASE("family diagonal carries the three population groups") {
    const double a = 3.7;
    const DensityMatrix rho = horodecki_state(AlphaParameter(a));
    const ComplexMatrix& m = rho.matrix();
    const double expected_diag[9] = {a, 2.0, 5.0 - a, 2.0, 5.0 - a, a, 5.0 - a, a, 2.0};
    for (std::size_t i = 0; i < 9; ++i)
        CHECK(m(i, i).real() == doctest::Approx(expected_diag[i] / 21.0).epsilon(1e-15));
}

TEST_CASE("family coherences sit on the entangled triple and nowhere else") {
    const DensityMatrix rho = horodecki_state(AlphaParameter(2.8));
    const ComplexMatrix& m = rho.matrix();
    const bool triple[9] = {false, true, false, true, false, false, false, false, true};
    for (std::size_t i = 0; i < 9; ++i) {
        for (std::size_t j = 0; j < 9; ++j) {
            if (i == j) continue;
            const double expected = triple[i] && triple[j] ? 2.0 / 21.0 : 0.0;
            CHECK(std::abs(m(i, j) - cplx(expected)) < 1e-15);
        }
    }
    CHECK(std::abs(m.trace() - cplx(1.0)) < 1e-15);
}

TEST_CASE("alpha=5 member has the expected spectrum") {
    const std::vector<double> vals =
        hermitian_eigenvalues(horodecki_state(AlphaParameter(5.0)).matrix());
    REQUIRE(vals.size() == 9);
    CHECK(vals[0] == doctest::Approx(2.0 / 7.0).epsilon(1e-12));
    for (std::size_t i = 1; i < 4; ++i)
        CHECK(vals[i] == doctest::Approx(5.0 / 21.0).epsilon(1e-12));
    for (std::size_t i = 4; i < 9; ++i) CHECK(std::abs(vals[i]) < 1e-13);
}

TEST_CASE("every family member is a valid state") {
    for (double a : {2.0, 2.6, 3.0, 3.4, 4.0, 4.7, 5.0}) {
        const DensityMatrix rho = horodecki_state(AlphaParameter(a));
        CHECK(rho.min_eigenvalue() >= -1e-12);
        CHECK(rho.shape().dim_a == 3);
        CHECK(rho.shape().dim_b == 3);
    }
}

TEST_CASE("maximally entangled states") {
    const DensityMatrix bell_state = max_entangled(2);
    const ComplexMatrix& bell = bell_state.matrix();
    for (std::size_t i : {0, 3})
        for (std::size_t j : {0, 3}) CHECK(bell(i, j) == cplx(0.5));
    CHECK(bell(1, 1) == cplx(0.0));
    CHECK(bell(0, 1) == cplx(0.0));

    const DensityMatrix psi3_state = max_entangled(3);
    const ComplexMatrix& psi3 = psi3_state.matrix();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(std::abs(psi3(i * 3 + i, j * 3 + j) - cplx(1.0 / 3.0)) < 1e-15);
    CHECK(std::abs(psi3(1, 1)) == 0.0);

    const std::vector<double> vals = hermitian_eigenvalues(psi3);
    CHECK(vals[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(vals[1]) < 1e-13);

    CHECK_THROWS_AS(max_entangled(1), std::invalid_argument);
}

TEST_CASE("classification over the three intervals") {
    CHECK(classify(AlphaParameter(2.0)) == EntanglementClass::Separable);
    CHECK(classify(AlphaParameter(3.0)) == EntanglementClass::Separable);
    CHECK(classify(AlphaParameter(3.0001)) == EntanglementClass::BoundEntangled);
    CHECK(classify(AlphaParameter(4.0)) == EntanglementClass::BoundEntangled);
    CHECK(classify(AlphaParameter(4.0001)) == EntanglementClass::FreeEntangled);
    CHECK(classify(AlphaParameter(5.0)) == EntanglementClass::FreeEntangled);

    CHECK(std::string(to_string(EntanglementClass::Separable)) == "separable");
    CHECK(std::string(to_string(EntanglementClass::BoundEntangled)) == "bound-entangled");
    CHECK(std::string(to_string(EntanglementClass::FreeEntangled)) == "free-entangled");
}

TEST_CASE("partial transpose turns negative exactly past alpha=4") {
    const auto min_pt_eig = [](double a) {
        return hermitian_eigenvalues(partial_transpose(horodecki_state(AlphaParameter(a))))
            .back();
    };
    CHECK(min_pt_eig(2.0) >= -1e-12);
    CHECK(min_pt_eig(3.5) >= -1e-12);
    CHECK(min_pt_eig(4.0) >= -1e-12);
    CHECK(min_pt_eig(4.1) < -1e-3);
    CHECK(min_pt_eig(5.0) < -1e-3);
}
