#pragma once

#include "qacc/density_matrix.hpp"
#include "qacc/states.hpp"

#include <iosfwd>
#include <vector>

namespace qacc {

// Rindler mixing angle, valid on [0, pi/4].
class AccelerationParameter {
public:
    explicit AccelerationParameter(double r);
    double value() const { return r_; }

private:
    double r_;
};

// Linear map from one Minkowski qutrit level into the region-I (x) region-II
// space. Each region carries the 4-level basis {0, 1, 2, P} with the pair
// level |P> at index 3; rows are ordered 4*i_I + i_II. Columns are
// orthonormal for every r.
struct RindlerIsometry {
    ComplexMatrix matrix;  // 16 x 3
};

RindlerIsometry rindler_isometry(AccelerationParameter r);

// Applies the isometry to both parties, traces out both region-II factors,
// and reorders to region-I_a (x) region-I_b. Input 3x3-local, output
// 4x4-local with trace preserved.
DensityMatrix accelerate(const DensityMatrix& rho, AccelerationParameter r_a,
                         AccelerationParameter r_b);

// One coefficient of the closed-form element table for the accelerated
// state. Indices are 1-based over the ordered 16-element basis
// {00,01,02,10,11,12,20,21,22,0P,1P,2P,P0,P1,P2,PP}; Hermitian closure is
// implied. Entries whose position assignment is ambiguous in the source
// table carry both candidate readings and a flag.
struct ClosedFormEntry {
    std::size_t row = 0;
    std::size_t col = 0;
    double value = 0.0;      // primary reading
    bool ambiguous = false;
    double alt_value = 0.0;  // second reading where one exists
};

struct ClosedFormElements {
    std::vector<ClosedFormEntry> entries;  // upper triangle incl. diagonal
};

ClosedFormElements closed_form_elements(AlphaParameter alpha, AccelerationParameter r);

struct Discrepancy {
    std::size_t row_index = 0;  // 1-based, table basis order
    std::size_t col_index = 0;
    double generic = 0.0;
    double closed_form = 0.0;
    double abs_diff = 0.0;
    bool ambiguous_flag = false;
};

struct DiscrepancyReport {
    std::vector<Discrepancy> rows;
};

// Compares accelerate(horodecki_state(alpha), r, r) entrywise against the
// closed-form table and lists every position that differs by more than
// 1e-12, including positions the table omits but the construction fills.
DiscrepancyReport cross_check(AlphaParameter alpha, AccelerationParameter r);

// CSV columns: row_index, col_index, generic, closed_form, abs_diff,
// ambiguous_flag.
void emit_csv(const DiscrepancyReport& report, std::ostream& out);

}  // namespace qacc
