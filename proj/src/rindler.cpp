#include "qacc/rindler.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace qacc {

namespace {

// Ordered 16-element basis {00,01,02,10,11,12,20,21,22,0P,1P,2P,P0,P1,P2,PP}
// mapped to row-major composite indices a*4 + b with P = 3.
constexpr std::size_t kBasisOrder[16] = {0, 1, 2, 4, 5, 6, 8, 9, 10, 3, 7, 11, 12, 13, 14, 15};

constexpr std::pair<std::size_t, std::size_t> kAmbiguousPositions[4] = {
    {6, 10}, {8, 13}, {5, 15}, {5, 12}};

bool is_ambiguous(std::size_t i, std::size_t j) {
    for (auto [a, b] : kAmbiguousPositions)
        if ((i == a && j == b) || (i == b && j == a)) return true;
    return false;
}

// Region-II slice of the isometry: a_u(i, k) = V(4*i + u, k). The sandwich
// sum over slices of both parties realizes the region-II partial trace.
ComplexMatrix slice(const ComplexMatrix& v, std::size_t u) {
    ComplexMatrix a(4, 3);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 3; ++k) a(i, k) = v(4 * i + u, k);
    return a;
}

}  // namespace

AccelerationParameter::AccelerationParameter(double r) : r_(r) {
    if (!(r >= 0.0 && r <= M_PI / 4.0))
        throw std::invalid_argument("AccelerationParameter: value must lie in [0, pi/4]");
}

RindlerIsometry rindler_isometry(AccelerationParameter r) {
    const double c = std::cos(r.value());
    const double s = std::sin(r.value());
    ComplexMatrix v(16, 3);
    // |0> -> cos^2 r |00> + cos r sin r (|12> + |21>) + sin^2 r |PP>
    v(0, 0) = c * c;
    v(4 * 1 + 2, 0) = c * s;
    v(4 * 2 + 1, 0) = c * s;
    v(4 * 3 + 3, 0) = s * s;
    // |1> -> cos r |10> + sin r |P1>
    v(4 * 1 + 0, 1) = c;
    v(4 * 3 + 1, 1) = s;
    // |2> -> cos r |20> - sin r |P2>
    v(4 * 2 + 0, 2) = c;
    v(4 * 3 + 2, 2) = -s;
    return RindlerIsometry{std::move(v)};
}

DensityMatrix accelerate(const DensityMatrix& rho, AccelerationParameter r_a,
                         AccelerationParameter r_b) {
    if (rho.shape().dim_a != 3 || rho.shape().dim_b != 3)
        throw std::invalid_argument("accelerate: input must be a 3x3-local state");
    const ComplexMatrix va = rindler_isometry(r_a).matrix;
    const ComplexMatrix vb = rindler_isometry(r_b).matrix;
    ComplexMatrix out(16, 16);
    for (std::size_t u = 0; u < 4; ++u) {
        const ComplexMatrix au = slice(va, u);
        for (std::size_t w = 0; w < 4; ++w) {
            const ComplexMatrix k = kron(au, slice(vb, w));
            out += k * rho.matrix() * k.adjoint();
        }
    }
    return DensityMatrix(std::move(out), {4, 4});
}

ClosedFormElements closed_form_elements(AlphaParameter alpha, AccelerationParameter r) {
    const double a = alpha.value();
    const double c = std::cos(r.value());
    const double s = std::sin(r.value());
    const double c2 = c * c, s2 = s * s;
    const double c3 = c2 * c, s4 = s2 * s2;
    const double c4 = c2 * c2, c5 = c4 * c, c6 = c4 * c2, c8 = c4 * c4;

    ClosedFormElements out;
    auto add = [&out](std::size_t i, std::size_t j, double value) {
        out.entries.push_back({i, j, value / 21.0, false, 0.0});
    };
    auto add_ambiguous = [&out](std::size_t i, std::size_t j, double value, double alt) {
        out.entries.push_back({i, j, value / 21.0, true, alt / 21.0});
    };

    add(1, 1, a * c8);
    add(2, 2, c6 * (2.0 + a * s2));
    add(3, 3, c6 * (5.0 - a * c2));
    add(4, 4, c6 * (2.0 + a * s2));
    add(5, 5, c4 * (a * s4 + 4.0 * s2 - a + 5.0));
    add(6, 6, c4 * (a * c2 + s2 * (7.0 + a * s2)));
    add(7, 7, c6 * (5.0 - a * c2));
    add(8, 8, c4 * (a * c2 + s2 * (7.0 + a * s2)));
    add(9, 9, c4 * (a * s4 + 2.0 * (5.0 - a) * s2 + 2.0));
    add(10, 10, c4 * s2 * (7.0 - a * c2));
    add(11, 11, c2 * s2 * (a * s4 + (9.0 - a) * s2 + 5.0));
    add(12, 12, c2 * s2 * (a * s4 + (12.0 - 2.0 * a) * s2 + a + 2.0));
    add(13, 13, c4 * s2 * (7.0 - a * c2));
    add(14, 14, c2 * s2 * (a * s4 + (9.0 - a) * s2 + 5.0));
    add(15, 15, c2 * s2 * (a * s4 + (12.0 - 2.0 * a) * s2 + a + 2.0));
    add(16, 16, s4 * (a * s4 + (14.0 - 2.0 * a) * s2 + 7.0 + a));

    add(2, 4, 2.0 * c6);
    add(2, 9, 2.0 * c5);
    add(4, 9, 2.0 * c5);
    add(12, 15, 2.0 * s4 * c2);

    // The source table assigns one symbol to two positions twice over, and
    // prints two conflicting values for one of those symbols. Both readings
    // are carried; the first printed value is primary.
    for (auto [i, j] : kAmbiguousPositions)
        add_ambiguous(i, j, 2.0 * s2 * c4, -2.0 * c3 * s2);

    return out;
}

DiscrepancyReport cross_check(AlphaParameter alpha, AccelerationParameter r) {
    const DensityMatrix generic = accelerate(horodecki_state(alpha), r, r);

    ComplexMatrix table(16, 16);
    for (const ClosedFormEntry& e : closed_form_elements(alpha, r).entries) {
        const std::size_t gi = kBasisOrder[e.row - 1];
        const std::size_t gj = kBasisOrder[e.col - 1];
        table(gi, gj) = e.value;
        table(gj, gi) = e.value;
    }

    DiscrepancyReport report;
    for (std::size_t i = 1; i <= 16; ++i) {
        for (std::size_t j = 1; j <= 16; ++j) {
            const std::size_t gi = kBasisOrder[i - 1];
            const std::size_t gj = kBasisOrder[j - 1];
            const double gen = generic.matrix()(gi, gj).real();
            const double cf = table(gi, gj).real();
            const double diff = std::abs(gen - cf);
            if (diff > 1e-12)
                report.rows.push_back({i, j, gen, cf, diff, is_ambiguous(i, j)});
        }
    }
    return report;
}

void emit_csv(const DiscrepancyReport& report, std::ostream& out) {
    out << "row_index,col_index,generic,closed_form,abs_diff,ambiguous_flag\n";
    char buf[128];
    for (const Discrepancy& d : report.rows) {
        std::snprintf(buf, sizeof buf, "%zu,%zu,%.12g,%.12g,%.12g,%s", d.row_index, d.col_index,
                      d.generic, d.closed_form, d.abs_diff, d.ambiguous_flag ? "true" : "false");
        out << buf << '\n';
    }
}

}  // namespace qacc
