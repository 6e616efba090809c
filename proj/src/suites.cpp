#include "fsig/suites.hpp"

#include <sstream>

#include "json.hpp"

#include "fsig/errors.hpp"

namespace fsig {

namespace {

Check bool_check(std::string name, bool pass, std::string witness) {
    Check c;
    c.name = std::move(name);
    c.pass = pass;
    c.lhs = pass ? "true" : "false";
    c.rhs = "true";
    c.witness = std::move(witness);
    return c;
}

Check eq(std::string name, const Rational& lhs, const Rational& rhs, std::string witness) {
    Check c;
    c.name = std::move(name);
    c.pass = lhs == rhs;
    c.lhs = to_string(lhs);
    c.rhs = to_string(rhs);
    c.witness = std::move(witness);
    return c;
}

Check le(std::string name, const Rational& lhs, const Rational& rhs, std::string witness) {
    Check c;
    c.name = std::move(name);
    c.pass = lhs <= rhs;
    c.lhs = to_string(lhs);
    c.rhs = to_string(rhs);
    c.witness = std::move(witness);
    return c;
}

Check lt(std::string name, const Rational& lhs, const Rational& rhs, std::string witness) {
    Check c;
    c.name = std::move(name);
    c.pass = lhs < rhs;
    c.lhs = to_string(lhs);
    c.rhs = to_string(rhs);
    c.witness = std::move(witness);
    return c;
}

TDivisor cls(const std::string& variety, std::initializer_list<long> coords) {
    const Builtin& b = builtin(variety);
    QVec q;
    for (long c : coords) q.push_back(Rational(c));
    return divisor_from_class(b, q);
}

// documented ample test classes per builtin
const std::vector<std::pair<std::string, std::vector<std::vector<long>>>>& ample_catalog() {
    static const std::vector<std::pair<std::string, std::vector<std::vector<long>>>> cat = {
        {"p1", {{1}, {2}, {3}, {4}, {5}}},
        {"p2", {{1}, {2}, {3}, {4}, {5}}},
        {"p3", {{1}, {2}, {3}, {4}, {5}}},
        {"p1xp1", {{1, 1}, {1, 2}, {2, 3}, {3, 1}, {2, 2}}},
        {"bl_p2", {{2, 1}, {3, 1}, {3, 2}, {4, 3}, {5, 2}}},
    };
    return cat;
}

// divisors whose splitting degrees are swept by the degree suite
const std::vector<std::pair<std::string, std::vector<std::vector<long>>>>& degree_catalog() {
    static const std::vector<std::pair<std::string, std::vector<std::vector<long>>>> cat = {
        {"p1", {{1}, {2}}},
        {"p2", {{1}}},
        {"p3", {{1}}},
        {"p1xp1", {{1, 1}, {1, 2}}},
        {"bl_p2", {{2, 1}, {3, 1}}},
    };
    return cat;
}

// singular section rings with a strictly shrinking convergence error
const std::vector<std::pair<std::string, std::vector<long>>>& singular_catalog() {
    static const std::vector<std::pair<std::string, std::vector<long>>> cat = {
        {"p1xp1", {1, 1}},
        {"p1xp1", {1, 2}},
        {"bl_p2", {2, 1}},
        {"bl_p2", {3, 1}},
    };
    return cat;
}

std::string class_witness(const std::string& variety, const std::vector<long>& coords) {
    std::ostringstream os;
    os << variety << " (";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ",";
        os << coords[i];
    }
    os << ")";
    return os.str();
}

NSBasis ample_surface_basis(const std::string& variety) {
    const Builtin& b = builtin(variety);
    if (variety == "p1xp1")
        return NSBasis::make(b.fan, {cls(variety, {1, 1}), cls(variety, {1, 2})});
    if (variety == "bl_p2")
        return NSBasis::make(b.fan, {cls(variety, {2, 1}), cls(variety, {3, 1})});
    throw input_error("no documented ample basis for " + variety);
}

std::string ample_basis_witness(const std::string& variety) {
    return variety == "p1xp1" ? "basis {(1,1),(1,2)}" : "basis {2H-E,3H-E}";
}

NSBasis dictionary_basis(const std::string& variety) {
    const Builtin& b = builtin(variety);
    return NSBasis::make(b.fan, b.class_basis);
}

CheckReport suite_formulas() {
    CheckReport rep;
    rep.suite = "formulas";

    std::vector<std::pair<Rational, Rational>> pts;
    for (long a = 1; a <= 8; ++a)
        for (long b = 1; b <= 8; ++b) pts.emplace_back(Rational(a), Rational(b));
    auto r1 = compare_closed_forms("p1xp1", pts);
    rep.checks.insert(rep.checks.end(), r1.checks.begin(), r1.checks.end());

    pts.clear();
    for (long a = 1; a <= 8; ++a)
        for (long b = 1; b < a; ++b) pts.emplace_back(Rational(a), Rational(b));
    auto r2 = compare_closed_forms("bl_p2", pts);
    rep.checks.insert(rep.checks.end(), r2.checks.begin(), r2.checks.end());

    const Builtin& q = builtin("p1xp1");
    const Builtin& bl = builtin("bl_p2");
    auto pin = [&](const Builtin& v, long a, long b, const Rational& expect) {
        Rational got = fsignature(v.fan, divisor_from_class(v, {Rational(a), Rational(b)}));
        rep.checks.push_back(eq("pinned value", got, expect,
                                class_witness(v.fan.name, {a, b})));
    };
    pin(q, 1, 2, Rational(1, 4));
    pin(q, 1, 1, Rational(2, 3));
    pin(q, 2, 3, Rational(23, 108));
    pin(bl, 2, 1, Rational(5, 12));
    pin(bl, 3, 1, Rational(11, 36));
    pin(bl, 5, 1, Rational(19, 120));

    // symmetry of the quadric surface
    const std::vector<std::pair<long, long>> swaps = {{1, 2}, {2, 3}, {3, 8}};
    for (auto [a, b] : swaps) {
        Rational s1 = fsignature(q.fan, divisor_from_class(q, {Rational(a), Rational(b)}));
        Rational s2 = fsignature(q.fan, divisor_from_class(q, {Rational(b), Rational(a)}));
        rep.checks.push_back(eq("s(a,b) == s(b,a)", s1, s2, class_witness("p1xp1", {a, b})));
    }

    // piece boundaries, rational witnesses; values from the adjacent pieces
    auto pinq = [&](const Builtin& v, const Rational& a, const Rational& b, const Rational& expect,
                    const char* name) {
        Rational got = fsignature(v.fan, divisor_from_class(v, {a, b}));
        Rational closed = v.fan.name == "p1xp1" ? closed_form_p1p1(a, b) : closed_form_blp2(a, b);
        rep.checks.push_back(eq(name, got, expect, "(" + to_string(a) + "," + to_string(b) + ")"));
        rep.checks.push_back(eq("closed form agrees on the boundary", closed, expect,
                                "(" + to_string(a) + "," + to_string(b) + ")"));
    };
    for (const Rational& a : {Rational(1), Rational(3, 2), Rational(2)})
        pinq(q, a, 2 * a, 1 / (4 * a), "boundary b=2a gives 1/(4a)");
    for (const Rational& b : {Rational(2), Rational(4)})
        pinq(bl, Rational(3, 2) * b, b, 1 / (3 * b), "boundary a=3b/2 gives 1/(3b)");
    for (const Rational& b : {Rational(1), Rational(2)})
        pinq(bl, 2 * b, b, 5 / (12 * b), "boundary a=2b gives 5/(12b)");
    for (const Rational& b : {Rational(1), Rational(2)})
        pinq(bl, 3 * b, b, 11 / (36 * b), "boundary a=3b gives 11/(36b)");
    return rep;
}

CheckReport suite_scaling() {
    CheckReport rep;
    rep.suite = "scaling";
    const std::vector<Rational> factors = {Rational(2), Rational(3), Rational(5), Rational(1, 2),
                                           Rational(7, 3)};
    for (const auto& [variety, classes] : ample_catalog()) {
        const Builtin& b = builtin(variety);
        for (const auto& coords : classes) {
            QVec q;
            for (long c : coords) q.push_back(Rational(c));
            auto sub = scaling_check(b.fan, divisor_from_class(b, q), factors,
                                     class_witness(variety, coords));
            rep.checks.insert(rep.checks.end(), sub.checks.begin(), sub.checks.end());
        }
    }
    return rep;
}

CheckReport suite_degrees(Int p_filter, int e_filter) {
    CheckReport rep;
    rep.suite = "degrees";
    std::vector<Int> ps = {2, 3};
    if (p_filter != 0) ps = {p_filter};
    std::vector<int> es = {1, 2, 3};
    if (e_filter != 0) es = {e_filter};

    for (const auto& [variety, classes] : degree_catalog()) {
        const Builtin& b = builtin(variety);
        const int d = b.fan.dim;
        for (const auto& coords : classes) {
            QVec q;
            for (long c : coords) q.push_back(Rational(c));
            TDivisor div = divisor_from_class(b, q);
            for (const Int& p : ps)
                for (int e : es) {
                    const long msd = max_splitting_degree(b.fan, div, p, e);
                    const long oracle = vanishing_degree_oracle(b.fan, div, p, e);
                    const Rational cap = Rational(d * d + d) * Rational(pow_z(p, e));
                    std::ostringstream w;
                    w << class_witness(variety, coords) << " p=" << p.get_str() << " e=" << e;
                    rep.checks.push_back(le("max splitting degree <= (d^2+d) p^e", Rational(msd),
                                            cap, w.str()));
                    rep.checks.push_back(le("max splitting degree <= dual vanishing degree",
                                            Rational(msd), Rational(oracle), w.str()));
                }
        }
    }

    // pinned small cases, both routes
    const Builtin& p1 = builtin("p1");
    const Builtin& p2 = builtin("p2");
    if (p_filter == 0 || p_filter == 2) {
        rep.checks.push_back(eq("max splitting degree (projective line, degree 1, p=2, e=1)",
                                Rational(max_splitting_degree(p1.fan, cls("p1", {1}), 2, 1)),
                                Rational(2), "p1 (1)"));
        rep.checks.push_back(eq("dual vanishing degree (projective line, degree 1, p=2, e=1)",
                                Rational(vanishing_degree_oracle(p1.fan, cls("p1", {1}), 2, 1)),
                                Rational(2), "p1 (1)"));
        rep.checks.push_back(eq("dual vanishing degree (projective plane, degree 1, p=2, e=1)",
                                Rational(vanishing_degree_oracle(p2.fan, cls("p2", {1}), 2, 1)),
                                Rational(3), "p2 (1)"));
    }
    if (p_filter == 0 || p_filter == 3)
        rep.checks.push_back(eq("dual vanishing degree (projective line, degree 2, p=3, e=1)",
                                Rational(vanishing_degree_oracle(p1.fan, cls("p1", {2}), 3, 1)),
                                Rational(2), "p1 (2)"));
    return rep;
}

CheckReport suite_convergence() {
    CheckReport rep;
    rep.suite = "convergence";
    Rational worst_scaled = 0;
    const std::vector<std::pair<Int, int>> levels = {{2, 4}, {3, 3}};

    for (const auto& [variety, coords] : singular_catalog()) {
        const Builtin& b = builtin(variety);
        QVec q;
        for (long c : coords) q.push_back(Rational(c));
        TDivisor div = divisor_from_class(b, q);
        for (const auto& [p, emax] : levels) {
            auto conv = convergence_report(b.fan, div, p, emax);
            std::ostringstream w;
            w << class_witness(variety, coords) << " p=" << p.get_str() << " e<=" << emax;
            rep.checks.push_back(lt("normalized free-rank error shrinks strictly",
                                    conv.rows.back().error, conv.rows.front().error, w.str()));
            worst_scaled = std::max(worst_scaled, conv.scaled_error_bound);
        }
    }

    // the ordinary double point: pinned errors at p=3 and exact rank at p=2
    const Builtin& p1 = builtin("p1");
    auto conv = convergence_report(p1.fan, cls("p1", {2}), 3, 3);
    const Rational expected_errors[] = {Rational(1, 18), Rational(1, 162), Rational(1, 1458)};
    for (int e = 1; e <= 3; ++e)
        rep.checks.push_back(eq("quadric cone error at p=3", conv.rows[e - 1].error,
                                expected_errors[e - 1], "p1 (2) e=" + std::to_string(e)));
    rep.checks.push_back(eq("quadric cone limit", conv.s, Rational(1, 2), "p1 (2)"));
    for (int e = 1; e <= 4; ++e) {
        auto fr = free_rank(p1.fan, cls("p1", {2}), 2, e);
        rep.checks.push_back(eq("quadric cone rank is exact at p=2", Rational(fr.a_e),
                                Rational(pow_z(2, 2 * e - 1)), "p1 (2) e=" + std::to_string(e)));
    }

    // smooth cases are exact at every level
    for (const std::string variety : {"p1", "p2", "p3"}) {
        const Builtin& b = builtin(variety);
        TDivisor o1 = cls(variety, {1});
        for (const auto& [p, emax] : levels) {
            auto c = convergence_report(b.fan, o1, p, emax);
            for (const auto& row : c.rows)
                rep.checks.push_back(eq("regular ring has full free rank", row.error, Rational(0),
                                        variety + " (1) p=" + p.get_str() +
                                            " e=" + std::to_string(row.e)));
            worst_scaled = std::max(worst_scaled, c.scaled_error_bound);
        }
    }
    rep.notes.emplace_back("max_error_times_p^e", to_string(worst_scaled));
    return rep;
}

CheckReport suite_bounds() {
    CheckReport rep;
    rep.suite = "bounds";
    for (const std::string variety : {"p1xp1", "bl_p2"}) {
        GridSpec spec;
        spec.basis = ample_surface_basis(variety);
        spec.ranges = {{Rational(1), Rational(5)}, {Rational(1), Rational(5)}};
        spec.step = 1;
        auto sub = local_upper_bound_check(builtin(variety).fan, spec);
        for (auto& c : sub.checks) c.witness = variety + " " + ample_basis_witness(variety) + " " + c.witness;
        rep.checks.insert(rep.checks.end(), sub.checks.begin(), sub.checks.end());
        for (const auto& [k, v] : sub.notes) rep.notes.emplace_back(variety + "_" + k, v);
    }
    // pinned instance: (2,3) on the quadric in the documented basis
    const Builtin& q = builtin("p1xp1");
    Rational s = fsignature(q.fan, cls("p1xp1", {2, 3}));
    rep.checks.push_back(le("pinned: s(2,3) <= 512 vol / 6", s,
                            Rational(512) * Rational(12) / Rational(6), "p1xp1 (2,3) coords (1,1)"));
    return rep;
}

CheckReport suite_boundary() {
    CheckReport rep;
    rep.suite = "boundary";
    const Builtin& q = builtin("p1xp1");
    const Builtin& bl = builtin("bl_p2");
    const Rational tol(1, 1000);
    const int k = 8;

    auto check_target = [&](const Builtin& v, const TDivisor& d0, const TDivisor& a,
                            const Rational& target, const std::string& witness) {
        Rational got = boundary_limit(v.fan, d0, a, k);
        rep.checks.push_back(le("extrapolated boundary value within 1/1000 of target",
                                abs_q(got - target), tol, witness));
    };
    check_target(bl, cls("bl_p2", {1, 1}), cls("bl_p2", {1, 0}), 0, "bl_p2 H-E toward H");
    check_target(q, cls("p1xp1", {1, 0}), cls("p1xp1", {1, 1}), 0, "p1xp1 (1,0) toward (1,1)");
    check_target(bl, cls("bl_p2", {1, 0}), cls("bl_p2", {2, 1}), Rational(1, 2),
                 "bl_p2 H toward 2H-E");
    check_target(bl, cls("bl_p2", {2, 1}), cls("bl_p2", {1, 0}), Rational(5, 12),
                 "bl_p2 2H-E interior consistency");
    return rep;
}

CheckReport suite_lipschitz() {
    CheckReport rep;
    rep.suite = "lipschitz";
    struct Case {
        std::string variety;
        std::vector<long> center;
        Rational radius, h;
    };
    const std::vector<Case> cases = {
        {"bl_p2", {2, 1}, Rational(1, 2), Rational(1, 8)},
        {"p1xp1", {1, 1}, Rational(1, 4), Rational(1, 8)},
    };
    for (const auto& c : cases) {
        const Builtin& b = builtin(c.variety);
        auto prof = lipschitz_profile(b.fan, dictionary_basis(c.variety), cls(c.variety, {c.center[0], c.center[1]}),
                                      c.radius, c.h);
        const std::string w = class_witness(c.variety, c.center) + " r=" + to_string(c.radius) +
                              " h=" + to_string(c.h);
        rep.checks.push_back(bool_check("difference quotients finite", true, w));
        rep.checks.push_back(le("quotient at h/2 within twice the quotient at h",
                                prof.max_quotient_h2, 2 * prof.max_quotient_h, w));
        rep.notes.emplace_back(c.variety + "_max_quotient_h", to_string(prof.max_quotient_h));
        rep.notes.emplace_back(c.variety + "_max_quotient_h2", to_string(prof.max_quotient_h2));
        rep.notes.emplace_back(c.variety + "_vol_quotient_h", to_string(prof.vol_quotient_h));
    }
    return rep;
}

CheckReport suite_key_inequality() {
    CheckReport rep;
    rep.suite = "key-inequality";
    struct Case {
        std::string variety;
        std::vector<long> l, h;
        long n, b;
    };
    const std::vector<Case> cases = {
        {"bl_p2", {3, 1}, {1, 0}, 2, 1},
        {"bl_p2", {2, 1}, {1, 0}, 3, 2},
        {"p1xp1", {2, 2}, {1, 0}, 2, 1},
        {"p1xp1", {1, 2}, {0, 1}, 3, 1},
    };
    for (const auto& c : cases) {
        const Builtin& b = builtin(c.variety);
        auto sub = key_inequality_check(b.fan, dictionary_basis(c.variety),
                                        cls(c.variety, {c.l[0], c.l[1]}),
                                        cls(c.variety, {c.h[0], c.h[1]}), c.n, c.b,
                                        class_witness(c.variety, c.l));
        rep.checks.insert(rep.checks.end(), sub.checks.begin(), sub.checks.end());
        for (const auto& [k, v] : sub.notes)
            rep.notes.emplace_back(class_witness(c.variety, c.l) + "_" + k, v);
    }
    return rep;
}

CheckReport suite_ratio() {
    CheckReport rep;
    rep.suite = "ratio";
    for (const std::string variety : {"p1xp1", "bl_p2"}) {
        GridSpec spec;
        spec.basis = ample_surface_basis(variety);
        spec.ranges = {{Rational(1), Rational(6)}, {Rational(1), Rational(6)}};
        spec.step = 1;
        auto rr = ratio_report(builtin(variety).fan, spec);
        rep.checks.push_back(lt("min of s norm^(d+1) / vol stays positive", Rational(0),
                                rr.min_ratio, variety + " " + ample_basis_witness(variety) +
                                                  " grid 1..6, argmin " + format_point(rr.argmin)));
        rep.notes.emplace_back(variety + "_min_ratio", to_string(rr.min_ratio));
        rep.notes.emplace_back(variety + "_argmin", format_point(rr.argmin));
    }
    // pinned single point: (1,1) on the quadric has coords (1,0), ratio 1/3
    GridSpec one;
    one.basis = ample_surface_basis("p1xp1");
    one.ranges = {{Rational(1), Rational(1)}, {Rational(0), Rational(0)}};
    one.step = 1;
    auto rr = ratio_report(builtin("p1xp1").fan, one);
    rep.checks.push_back(eq("pinned ratio at coords (1,0)", rr.min_ratio, Rational(1, 3),
                            "p1xp1 (1,1) in basis {(1,1),(1,2)}"));
    return rep;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"formulas", "scaling", "degrees", "convergence", "bounds",
            "boundary", "lipschitz", "key-inequality", "ratio"};
}

CheckReport run_suite(const std::string& name, Int p_filter, int e_filter) {
    if (name == "formulas") return suite_formulas();
    if (name == "scaling") return suite_scaling();
    if (name == "degrees") return suite_degrees(p_filter, e_filter);
    if (name == "convergence") return suite_convergence();
    if (name == "bounds") return suite_bounds();
    if (name == "boundary") return suite_boundary();
    if (name == "lipschitz") return suite_lipschitz();
    if (name == "key-inequality") return suite_key_inequality();
    if (name == "ratio") return suite_ratio();
    throw input_error("unknown suite '" + name + "'");
}

std::vector<CheckReport> run_suites(const std::string& name, Int p_filter, int e_filter) {
    std::vector<CheckReport> reports;
    if (name == "all") {
        for (const auto& n : suite_names()) reports.push_back(run_suite(n, p_filter, e_filter));
    } else {
        reports.push_back(run_suite(name, p_filter, e_filter));
    }
    return reports;
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
    nlohmann::ordered_json top;
    top["version"] = 1;
    top["tool"] = "fsig";
    auto arr = nlohmann::ordered_json::array();
    for (const auto& rep : reports) {
        nlohmann::ordered_json j;
        j["suite"] = rep.suite;
        j["passed"] = rep.passed();
        auto checks = nlohmann::ordered_json::array();
        for (const auto& c : rep.checks) {
            nlohmann::ordered_json cj;
            cj["name"] = c.name;
            cj["pass"] = c.pass;
            cj["lhs"] = c.lhs;
            cj["rhs"] = c.rhs;
            cj["witness"] = c.witness;
            checks.push_back(std::move(cj));
        }
        j["checks"] = std::move(checks);
        if (!rep.notes.empty()) {
            nlohmann::ordered_json notes;
            for (const auto& [k, v] : rep.notes) notes[k] = v;
            j["notes"] = std::move(notes);
        }
        arr.push_back(std::move(j));
    }
    top["suites"] = std::move(arr);
    top["passed"] = all_passed(reports);
    return top.dump(2) + "\n";
}

std::string report_summary(const CheckReport& report) {
    size_t ok = 0;
    for (const auto& c : report.checks) ok += c.pass ? 1 : 0;
    std::ostringstream os;
    os << report.suite << ": " << ok << "/" << report.checks.size() << " checks passed";
    return os.str();
}

bool all_passed(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed()) return false;
    return true;
}

} // namespace fsig
