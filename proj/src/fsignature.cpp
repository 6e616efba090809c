#include "fsig/fsignature.hpp"

#include <cstdlib>

#include "fsig/errors.hpp"

namespace fsig {

const long kDefaultScanBudget = 4000000;

long scan_budget() {
    if (const char* env = std::getenv("FSIG_SCAN_BUDGET")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultScanBudget;
}

namespace {

void require_integral_ample(const Fan& fan, const TDivisor& d) {
    if (!is_integral(d)) throw precondition_error("divisor must be integral here; clear denominators first");
    if (!is_ample(fan, d))
        throw precondition_error(
            "F-signature defined on the ample cone; use boundary_limit for nef classes");
}

void require_level(const Int& p, int e) {
    if (!is_prime(p)) throw input_error("p must be prime");
    if (e < 1) throw input_error("e must be >= 1");
}

void enforce_budget(const HPolytope& box, const char* what) {
    Int card = scan_box_cardinality(box);
    if (card > scan_budget())
        throw precondition_error(std::string(what) + ": predicted scan of " + card.get_str() +
                                 " points exceeds the budget of " + std::to_string(scan_budget()) +
                                 " (FSIG_SCAN_BUDGET)");
}

HPolytope splitting_box(const Fan& fan, const TDivisor& d, const Int& p, int e) {
    HPolytope box = frobenius_box(fan, d);
    return dilate(box, Rational(pow_z(p, e) - 1));
}

} // namespace

HPolytope frobenius_box(const Fan& fan, const TDivisor& d) {
    require_integral_ample(fan, d);
    auto cone_forms = cone_facet_normals(divisor_polytope(fan, d));
    std::vector<AffineForm> fs;
    for (const auto& l : cone_forms) {
        ZVec neg(l.size());
        for (size_t j = 0; j < l.size(); ++j) neg[j] = -l[j];
        fs.emplace_back(l, Rational(0));   // l(y) >= 0
        fs.emplace_back(neg, Rational(1)); // l(y) <= 1
    }
    return HPolytope(fan.dim + 1, std::move(fs));
}

Rational fsignature(const Fan& fan, const TDivisor& d) {
    if (!is_ample(fan, d))
        throw precondition_error(
            "F-signature defined on the ample cone; use boundary_limit for nef classes");
    Int k = 1;
    for (const auto& c : d.coeffs) k = lcm_z(k, Int(c.get_den()));
    TDivisor scaled = Rational(k) * d;
    return Rational(k) * volume(frobenius_box(fan, scaled));
}

FreeRankReport free_rank(const Fan& fan, const TDivisor& d, const Int& p, int e) {
    require_level(p, e);
    require_integral_ample(fan, d);
    HPolytope box = splitting_box(fan, d, p, e);
    enforce_budget(box, "free_rank");
    FreeRankReport r;
    r.p = p;
    r.e = e;
    r.a_e = static_cast<long>(lattice_points(box).size());
    r.normalized = Rational(r.a_e, pow_z(p, static_cast<unsigned long>(e) * (fan.dim + 1)));
    r.normalized.canonicalize();
    return r;
}

DegreeProfile splitting_dimensions(const Fan& fan, const TDivisor& d, const Int& p, int e) {
    require_level(p, e);
    require_integral_ample(fan, d);
    HPolytope box = splitting_box(fan, d, p, e);
    enforce_budget(box, "splitting_dimensions");
    DegreeProfile dims;
    for (const auto& pt : lattice_points(box)) {
        long m = pt.back().get_si();
        auto it = dims.find(m);
        if (it == dims.end())
            dims[m] = 1;
        else
            it->second += 1;
    }
    return dims;
}

long max_splitting_degree(const Fan& fan, const TDivisor& d, const Int& p, int e) {
    if (!is_globally_generated(fan, d))
        throw precondition_error("max_splitting_degree requires a globally generated divisor");
    auto dims = splitting_dimensions(fan, d, p, e);
    if (dims.empty()) throw precondition_error("empty splitting profile");
    return dims.rbegin()->first;
}

long vanishing_degree_oracle(const Fan& fan, const TDivisor& d, const Int& p, int e) {
    require_level(p, e);
    require_integral_ample(fan, d);
    const Rational q(pow_z(p, e) - 1);
    TDivisor nk = Rational(-1) * canonical_divisor(fan); // -K, coefficients all 1
    long last_with_section = -1;
    for (long m = 0;; ++m) {
        TDivisor dm = (q * nk) - (Rational(m) * d);
        HPolytope pm = divisor_polytope(fan, dm);
        if (!is_feasible(pm)) break;
        if (has_lattice_point(pm)) last_with_section = m;
    }
    if (last_with_section < 0) throw precondition_error("no splitting degree found");
    return last_with_section;
}

ConvergenceReport convergence_report(const Fan& fan, const TDivisor& d, const Int& p, int e_max) {
    if (e_max < 1) throw input_error("e_max must be >= 1");
    ConvergenceReport rep;
    rep.s = fsignature(fan, d);
    rep.scaled_error_bound = 0;
    for (int e = 1; e <= e_max; ++e) {
        auto fr = free_rank(fan, d, p, e);
        ConvergenceRow row;
        row.e = e;
        row.a_e = fr.a_e;
        row.normalized = fr.normalized;
        row.error = abs_q(fr.normalized - rep.s);
        rep.scaled_error_bound = std::max(rep.scaled_error_bound,
                                          Rational(row.error * Rational(pow_z(p, e))));
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace fsig
