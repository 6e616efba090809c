#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsig/fsignature.hpp"

namespace fsig {

// ---- check reports ------------------------------------------------------

struct Check {
    std::string name;
    bool pass = false;
    std::string lhs, rhs; // exact values being compared
    std::string witness;  // the instance, e.g. "a=2 b=1"
};

struct CheckReport {
    std::string suite;
    std::vector<Check> checks;
    std::vector<std::pair<std::string, std::string>> notes; // reported constants
    bool passed() const;
};

// ---- closed forms (surfaces) ---------------------------------------------

// Piecewise closed form on the ample cone of P1 x P1 (symmetric in a, b).  On
// a piece boundary every applicable piece is evaluated and must agree; the
// first-listed value is returned.
Rational closed_form_p1p1(const Rational& a, const Rational& b);

// Piecewise closed form on the ample cone 0 < b < a of the blow-up of P2 at a
// point, for the class aH - bE.  Same boundary policy.
Rational closed_form_blp2(const Rational& a, const Rational& b);

// Exact agreement of the volume computation with the closed form at the given
// class coordinates.
CheckReport compare_closed_forms(const std::string& variety,
                                 const std::vector<std::pair<Rational, Rational>>& points);

// ---- structural checks ----------------------------------------------------

// lambda * s(lambda D) == s(D) for every factor.
CheckReport scaling_check(const Fan& fan, const TDivisor& d, const std::vector<Rational>& factors,
                          const std::string& witness);

struct LipschitzProfile {
    Rational max_quotient_h;  // max |s(L)-s(L')| / h over grid neighbors at step h
    Rational max_quotient_h2; // same at step h/2
    Rational vol_quotient_h;
    Rational vol_quotient_h2;
};

// Difference quotients over the open sup-norm ball of the given radius around
// center (grid = center + k h, |k h| < radius).  Every grid point must be
// ample.
LipschitzProfile lipschitz_profile(const Fan& fan, const NSBasis& basis, const TDivisor& center,
                                   const Rational& radius, const Rational& h);

struct GridSpec {
    NSBasis basis;
    std::vector<std::pair<Rational, Rational>> ranges; // inclusive, per coordinate
    Rational step;
};

// Grid coordinates in lex order.
std::vector<QVec> grid_points(const GridSpec& spec);

// ceil(max over divisors and (p,e) in {2,3}x{1,2,3} of ||D|| msd(D,p,e)/p^e):
// the empirical degree-bound constant used by the volume-normalized bounds.
Int empirical_c1(const Fan& fan, const NSBasis& basis, const std::vector<TDivisor>& divisors);

// Exact check of s <= (d^2+2d)^(d+1) vol / (floor(||L||)^(d+1) (d+1)!) on an
// ample grid, plus the same bound with the empirical constant in place of
// d^2+2d and ||L|| unrounded.  Basis classes must be ample and globally
// generated; grid coordinates nonnegative with floor(||L||) >= 1.
CheckReport local_upper_bound_check(const Fan& fan, const GridSpec& spec);

// Continuous extension toward a nonzero nef class D0: evaluates
// s(D0 + 2^-k A) for k = 1..schedule and extrapolates linearly from the last
// two samples.  D0 + lambda A must be ample at every scheduled lambda.
Rational boundary_limit(const Fan& fan, const TDivisor& d0, const TDivisor& a, int schedule);

// |s(L) - s(L + H/n)| against the effective Lipschitz right-hand side built
// from the empirical constant, vol(L), vol(L + H/n) and s(L).  Hypotheses
// (n > 2||H||/||L||, nL - bH big, H effective) are rechecked and named on
// failure.
CheckReport key_inequality_check(const Fan& fan, const NSBasis& basis, const TDivisor& l,
                                 const TDivisor& h, long n, long b, const std::string& witness);

struct RatioReport {
    Rational min_ratio; // min of s ||L||^(d+1) / vol over the grid
    QVec argmin;
};

RatioReport ratio_report(const Fan& fan, const GridSpec& spec);

// ---- grid sweeps ------------------------------------------------------------

struct GridRow {
    QVec coords;
    Rational norm;
    std::string flag; // "ample" | "nef-big-limit" | "nef-not-big"
    Rational s = 0;
    Rational vol = 0;
    std::optional<Rational> bound; // set when floor(norm) >= 1
    std::optional<Rational> ratio; // set when vol > 0
};

// Classifies and evaluates every grid point.  Ample points get the exact
// value; big nef boundary points get the boundary_limit extension; nef-not-big
// points get 0.  A point outside the nef cone is a precondition failure.
std::vector<GridRow> evaluate_grid(const Fan& fan, const GridSpec& spec, int boundary_schedule = 8);

} // namespace fsig
