#pragma once

#include <map>
#include <vector>

#include "fsig/toric.hpp"

namespace fsig {

// Default cap on the integer bounding-box cardinality a single lattice scan
// may visit; overridable through the FSIG_SCAN_BUDGET environment variable.
extern const long kDefaultScanBudget;

long scan_budget();

// {0 <= l_i <= 1} in dimension dim+1, where l_i are the primitive facet forms
// of the cone over (divisor polytope) x {1}.  D must be integral and ample.
HPolytope frobenius_box(const Fan& fan, const TDivisor& d);

// The F-signature of the section ring of (X, D) for ample rational D: the
// Euclidean volume of the Frobenius box, with denominators cleared through the
// scaling law s(D) = k * s(kD).
Rational fsignature(const Fan& fan, const TDivisor& d);

struct FreeRankReport {
    Int p;
    int e = 0;
    Int a_e;             // number of split lattice points, 0 <= l_i <= p^e - 1
    Rational normalized; // a_e / p^(e(dim+1))
};

// Frobenius free rank of the section ring at level e; D integral ample,
// p prime.
FreeRankReport free_rank(const Fan& fan, const TDivisor& d, const Int& p, int e);

// dims[m] = free rank contributed in degree m (the z = m slice of the scan);
// only nonzero entries are kept.  Sums to a_e.
using DegreeProfile = std::map<long, Int>;

DegreeProfile splitting_dimensions(const Fan& fan, const TDivisor& d, const Int& p, int e);

// Largest degree with a nonzero splitting contribution; D must additionally be
// globally generated.
long max_splitting_degree(const Fan& fan, const TDivisor& d, const Int& p, int e);

// Largest m >= 0 such that -(p^e-1)K - mD still has a global section
// (a lattice point in its divisor polytope).  Dual-criterion upper bound for
// max_splitting_degree.
long vanishing_degree_oracle(const Fan& fan, const TDivisor& d, const Int& p, int e);

struct ConvergenceRow {
    int e = 0;
    Int a_e;
    Rational normalized;
    Rational error; // |normalized - s|
};

struct ConvergenceReport {
    Rational s;
    std::vector<ConvergenceRow> rows;
    Rational scaled_error_bound; // max_e error_e * p^e
};

ConvergenceReport convergence_report(const Fan& fan, const TDivisor& d, const Int& p, int e_max);

} // namespace fsig
