#include "doctest.h"

#include "fsig/analysis.hpp"
#include "fsig/suites.hpp"

using namespace fsig;

namespace {

TDivisor from_class(const std::string& name, std::initializer_list<Rational> coords) {
    return divisor_from_class(builtin(name), QVec(coords));
}

NSBasis dict_basis(const std::string& name) {
    const Builtin& b = builtin(name);
    return NSBasis::make(b.fan, b.class_basis);
}

GridSpec make_grid(NSBasis basis, std::initializer_list<std::pair<Rational, Rational>> ranges,
                   const Rational& step) {
    GridSpec spec;
    spec.basis = std::move(basis);
    spec.ranges = ranges;
    spec.step = step;
    return spec;
}

} // namespace

TEST_CASE("closed forms: domains, symmetry, pinned values") {
    CHECK(closed_form_p1p1(1, 2) == Rational(1, 4));
    CHECK(closed_form_p1p1(1, 1) == Rational(2, 3));
    CHECK(closed_form_p1p1(2, 3) == Rational(23, 108));
    CHECK(closed_form_p1p1(Rational(3, 2), 5) == closed_form_p1p1(5, Rational(3, 2)));
    CHECK_THROWS_AS(closed_form_p1p1(0, 1), precondition_error);
    CHECK_THROWS_AS(closed_form_p1p1(1, -2), precondition_error);

    CHECK(closed_form_blp2(2, 1) == Rational(5, 12));
    CHECK(closed_form_blp2(3, 1) == Rational(11, 36));
    CHECK(closed_form_blp2(5, 1) == Rational(19, 120));
    CHECK(closed_form_blp2(7, 4) == Rational(11, 108));
    CHECK(closed_form_blp2(8, 5) == Rational(161, 2160));
    CHECK_THROWS_AS(closed_form_blp2(1, 1), precondition_error);
    CHECK_THROWS_AS(closed_form_blp2(1, 0), precondition_error);
    CHECK_THROWS_AS(closed_form_blp2(1, 2), precondition_error);
}

TEST_CASE("piece boundaries agree from both sides") {
    for (const Rational& a : {Rational(1), Rational(3, 2), Rational(2)})
        CHECK(closed_form_p1p1(a, 2 * a) == 1 / (4 * a));
    for (const Rational& b : {Rational(2), Rational(4)})
        CHECK(closed_form_blp2(Rational(3, 2) * b, b) == 1 / (3 * b));
    for (const Rational& b : {Rational(1), Rational(2)}) {
        CHECK(closed_form_blp2(2 * b, b) == 5 / (12 * b));
        CHECK(closed_form_blp2(3 * b, b) == 11 / (36 * b));
    }
}

TEST_CASE("volume computation matches the closed forms") {
    auto rep = compare_closed_forms("p1xp1", {{2, 3}, {Rational(5, 2), Rational(1, 3)}});
    CHECK(rep.passed());
    auto rep2 = compare_closed_forms("bl_p2", {{3, 2}, {Rational(7, 2), Rational(1, 2)}});
    CHECK(rep2.passed());
    CHECK_THROWS_AS(compare_closed_forms("p2", {{1, 1}}), input_error);
}

TEST_CASE("scaling law checks") {
    auto rep = scaling_check(builtin("p2").fan, from_class("p2", {3}),
                             {Rational(2), Rational(1, 2), Rational(7, 3)}, "p2 (3)");
    REQUIRE(rep.checks.size() == 3);
    CHECK(rep.passed());
}

TEST_CASE("grid point generation") {
    auto spec = make_grid(dict_basis("p1xp1"), {{1, 3}, {1, 1}}, Rational(1, 2));
    auto pts = grid_points(spec);
    REQUIRE(pts.size() == 5);
    CHECK(pts.front() == QVec{Rational(1), Rational(1)});
    CHECK(pts[1] == QVec{Rational(3, 2), Rational(1)});
    CHECK(pts.back() == QVec{Rational(3), Rational(1)});

    auto empty = grid_points(make_grid(dict_basis("p1xp1"), {{2, 1}, {1, 1}}, Rational(1)));
    CHECK(empty.empty());
}

TEST_CASE("local upper bound checks and preconditions") {
    auto rep = local_upper_bound_check(
        builtin("p1xp1").fan,
        make_grid(NSBasis::make(builtin("p1xp1").fan,
                                {from_class("p1xp1", {1, 1}), from_class("p1xp1", {1, 2})}),
                  {{1, 3}, {1, 3}}, Rational(1)));
    CHECK(rep.passed());
    CHECK(rep.checks.size() == 18);
    REQUIRE(rep.notes.size() == 1);
    CHECK(rep.notes[0].first == "empirical_C1");

    // a basis class that is not ample is rejected
    CHECK_THROWS_AS(
        local_upper_bound_check(builtin("bl_p2").fan,
                                make_grid(dict_basis("bl_p2"), {{1, 2}, {1, 2}}, Rational(1))),
        precondition_error);
    // grid points below norm 1 are rejected
    CHECK_THROWS_WITH_AS(
        local_upper_bound_check(
            builtin("p1xp1").fan,
            make_grid(NSBasis::make(builtin("p1xp1").fan,
                                    {from_class("p1xp1", {1, 1}), from_class("p1xp1", {1, 2})}),
                      {{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}},
                      Rational(1))),
        doctest::Contains("floor(norm)"), precondition_error);
}

TEST_CASE("boundary limits extrapolate to the pinned targets") {
    const Fan& bl = builtin("bl_p2").fan;
    const Fan& q = builtin("p1xp1").fan;
    const Rational tol(1, 1000);

    Rational z1 = boundary_limit(bl, from_class("bl_p2", {1, 1}), from_class("bl_p2", {1, 0}), 8);
    CHECK(abs_q(z1) <= tol);
    Rational z2 = boundary_limit(q, from_class("p1xp1", {1, 0}), from_class("p1xp1", {1, 1}), 8);
    CHECK(abs_q(z2) <= tol);
    Rational h = boundary_limit(bl, from_class("bl_p2", {1, 0}), from_class("bl_p2", {2, 1}), 8);
    CHECK(abs_q(h - Rational(1, 2)) <= tol);
    // ample target: the extension agrees with the exact value
    Rational inner =
        boundary_limit(bl, from_class("bl_p2", {2, 1}), from_class("bl_p2", {1, 0}), 8);
    CHECK(abs_q(inner - Rational(5, 12)) <= tol);
}

TEST_CASE("boundary limit preconditions") {
    const Fan& bl = builtin("bl_p2").fan;
    TDivisor zero;
    zero.coeffs.assign(4, Rational(0));
    CHECK_THROWS_WITH_AS(boundary_limit(bl, zero, from_class("bl_p2", {2, 1}), 4),
                         doctest::Contains("non-zero"), precondition_error);
    CHECK_THROWS_WITH_AS(boundary_limit(bl, from_class("bl_p2", {0, -1}),
                                        from_class("bl_p2", {2, 1}), 4),
                         doctest::Contains("nef"), precondition_error);
    CHECK_THROWS_WITH_AS(boundary_limit(bl, from_class("bl_p2", {1, 0}),
                                        from_class("bl_p2", {1, 0}), 4),
                         doctest::Contains("lambda"), precondition_error);
    CHECK_THROWS_AS(boundary_limit(bl, from_class("bl_p2", {1, 0}),
                                   from_class("bl_p2", {2, 1}), 1),
                    input_error);
}

TEST_CASE("lipschitz profile quotients") {
    auto prof = lipschitz_profile(builtin("p1xp1").fan, dict_basis("p1xp1"),
                                  from_class("p1xp1", {1, 1}), Rational(1, 4), Rational(1, 8));
    CHECK(prof.max_quotient_h > 0);
    CHECK(prof.max_quotient_h2 <= 2 * prof.max_quotient_h);

    CHECK_THROWS_WITH_AS(lipschitz_profile(builtin("p1xp1").fan, dict_basis("p1xp1"),
                                           from_class("p1xp1", {1, 1}), Rational(2), Rational(1)),
                         doctest::Contains("ample"), precondition_error);
}

TEST_CASE("key inequality instances and hypothesis checks") {
    const Fan& bl = builtin("bl_p2").fan;
    auto rep = key_inequality_check(bl, dict_basis("bl_p2"), from_class("bl_p2", {3, 1}),
                                    from_class("bl_p2", {1, 0}), 2, 1, "bl_p2 (3,1)");
    CHECK(rep.passed());
    bool noted = false;
    for (const auto& [k, v] : rep.notes) noted = noted || k == "empirical_C1";
    CHECK(noted);

    CHECK_THROWS_WITH_AS(key_inequality_check(bl, dict_basis("bl_p2"), from_class("bl_p2", {3, 1}),
                                              from_class("bl_p2", {1, 0}), 0, 1, "w"),
                         doctest::Contains("n, b >= 1"), input_error);
    // n = 2 is not above 2||H||/||L|| = 3 here
    CHECK_THROWS_WITH_AS(key_inequality_check(bl, dict_basis("bl_p2"), from_class("bl_p2", {2, 1}),
                                              from_class("bl_p2", {3, 0}), 2, 1, "w"),
                         doctest::Contains("key inequality hypothesis failed"),
                         precondition_error);
}

TEST_CASE("ratio reports") {
    NSBasis basis = NSBasis::make(builtin("p1xp1").fan,
                                  {from_class("p1xp1", {1, 1}), from_class("p1xp1", {1, 2})});
    auto rep = ratio_report(builtin("p1xp1").fan, make_grid(basis, {{1, 1}, {0, 0}}, Rational(1)));
    CHECK(rep.min_ratio == Rational(1, 3));

    CHECK_THROWS_AS(ratio_report(builtin("p1xp1").fan,
                                 make_grid(dict_basis("p1xp1"), {{0, 1}, {0, 1}}, Rational(1))),
                    precondition_error);
}

TEST_CASE("grid evaluation classifies nef boundary points") {
    auto rows = evaluate_grid(builtin("bl_p2").fan,
                              make_grid(dict_basis("bl_p2"), {{1, 2}, {0, 1}}, Rational(1)), 6);
    REQUIRE(rows.size() == 4);

    CHECK(rows[0].coords == QVec{Rational(1), Rational(0)}); // H: big nef boundary
    CHECK(rows[0].flag == "nef-big-limit");
    CHECK(abs_q(rows[0].s - Rational(1, 2)) <= Rational(1, 100));
    CHECK(rows[0].vol == 1);

    CHECK(rows[1].coords == QVec{Rational(1), Rational(1)}); // H - E: nef, not big
    CHECK(rows[1].flag == "nef-not-big");
    CHECK(rows[1].s == 0);

    CHECK(rows[2].flag == "nef-big-limit"); // 2H
    CHECK(rows[3].coords == QVec{Rational(2), Rational(1)});
    CHECK(rows[3].flag == "ample");
    CHECK(rows[3].s == Rational(5, 12));
    CHECK(rows[3].vol == 3);
    REQUIRE(rows[3].ratio);
    CHECK(*rows[3].ratio == Rational(5, 12) * 8 / 3);

    CHECK_THROWS_WITH_AS(evaluate_grid(builtin("bl_p2").fan,
                                       make_grid(dict_basis("bl_p2"), {{0, 1}, {1, 2}},
                                                 Rational(1)),
                                       4),
                         doctest::Contains("nef"), precondition_error);
}

TEST_CASE("suite catalog runs and serializes deterministically") {
    auto names = suite_names();
    CHECK(names.size() == 9);
    CHECK_THROWS_AS(run_suite("nope"), input_error);

    auto reports = run_suites("boundary");
    REQUIRE(reports.size() == 1);
    CHECK(all_passed(reports));
    CHECK(report_summary(reports[0]) == "boundary: 4/4 checks passed");
    std::string json1 = reports_to_json(reports);
    std::string json2 = reports_to_json(run_suites("boundary"));
    CHECK(json1 == json2);
    CHECK(json1.find("\"version\": 1") != std::string::npos);
}

TEST_CASE("empirical degree constant") {
    const Builtin& p1 = builtin("p1");
    NSBasis basis = NSBasis::make(p1.fan, p1.class_basis);
    Int c1 = empirical_c1(p1.fan, basis, {from_class("p1", {1})});
    CHECK(c1 >= 1);
    CHECK(c1 <= 2 * 6); // never exceeds the provable (d^2+d) p^e / p^e envelope times norm
}
