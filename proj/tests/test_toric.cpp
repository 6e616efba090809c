#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "fsig/input.hpp"
#include "fsig/toric.hpp"

using namespace fsig;

namespace {

ZVec zv(std::initializer_list<long> xs) {
    ZVec v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

TDivisor td(std::initializer_list<long> cs) {
    TDivisor d;
    for (long c : cs) d.coeffs.push_back(Rational(c));
    return d;
}

TDivisor from_class(const std::string& name, std::initializer_list<long> coords) {
    QVec q;
    for (long c : coords) q.push_back(Rational(c));
    return divisor_from_class(builtin(name), q);
}

// fan over the faces of the cube [-1,1]^3: complete with non-simplicial cones
Fan cube_fan() {
    std::vector<ZVec> rays;
    for (long x : {-1L, 1L})
        for (long y : {-1L, 1L})
            for (long z : {-1L, 1L}) rays.push_back(zv({x, y, z}));
    auto face = [&](int axis, long sign) {
        std::vector<int> cone;
        for (int i = 0; i < 8; ++i) {
            long coord = axis == 0 ? (i >> 2 ? 1 : -1) : axis == 1 ? ((i >> 1) & 1 ? 1 : -1)
                                                                   : (i & 1 ? 1 : -1);
            if (coord == sign) cone.push_back(i);
        }
        return cone;
    };
    std::vector<std::vector<int>> cones;
    for (int axis = 0; axis < 3; ++axis)
        for (long sign : {-1L, 1L}) cones.push_back(face(axis, sign));
    return Fan::make(3, std::move(rays), std::move(cones), "cube");
}

} // namespace

TEST_CASE("fan construction validates its input") {
    CHECK_THROWS_AS(Fan::make(2, {zv({2, 0}), zv({-1, 0}), zv({0, 1}), zv({0, -1})},
                              {{0, 2}, {0, 3}, {1, 2}, {1, 3}}),
                    input_error); // non-primitive ray
    CHECK_THROWS_AS(Fan::make(2, {zv({1, 0}), zv({1, 0}), zv({0, 1})}, {{0, 1}, {1, 2}}),
                    input_error); // duplicate ray
    CHECK_THROWS_AS(Fan::make(2, {zv({1, 0}), zv({0, 1})}, {{0}, {0, 1}}),
                    input_error); // lower-dimensional cone
    CHECK_THROWS_AS(Fan::make(2, {zv({1, 0}), zv({0, 1})}, {{0, 1}}),
                    input_error); // not complete
    CHECK_NOTHROW(cube_fan()); // complete, non-simplicial cones allowed
}

TEST_CASE("builtin catalog") {
    auto names = builtin_names();
    REQUIRE(names.size() == 5);
    for (const char* n : {"p1", "p2", "p3", "p1xp1", "bl_p2"})
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
    CHECK(picard_rank(builtin("p2").fan) == 1);
    CHECK(picard_rank(builtin("p3").fan) == 1);
    CHECK(picard_rank(builtin("p1xp1").fan) == 2);
    CHECK(picard_rank(builtin("bl_p2").fan) == 2);
    CHECK_THROWS_AS(builtin("p4"), input_error);
}

TEST_CASE("divisor polytopes") {
    const Fan& fan = builtin("bl_p2").fan;
    auto verts = vertex_enumeration(divisor_polytope(fan, from_class("bl_p2", {2, 1}))).vertices;
    REQUIRE(verts.size() == 4);
    CHECK(verts[0] == QVec{Rational(0), Rational(1)});
    CHECK(verts[1] == QVec{Rational(0), Rational(2)});
    CHECK(verts[2] == QVec{Rational(1), Rational(0)});
    CHECK(verts[3] == QVec{Rational(2), Rational(0)});
}

TEST_CASE("positivity classification on the blow-up") {
    const Fan& fan = builtin("bl_p2").fan;
    auto cls = [&](long a, long b) { return from_class("bl_p2", {a, b}); };

    CHECK(is_ample(fan, cls(2, 1)));
    CHECK(is_ample(fan, cls(3, 2)));
    CHECK(!is_ample(fan, cls(1, 0))); // H: nef, contracts nothing strictly
    CHECK(is_nef(fan, cls(1, 0)));
    CHECK(is_big(fan, cls(1, 0)));
    CHECK(!is_ample(fan, cls(1, 1))); // H - E: nef, not big
    CHECK(is_nef(fan, cls(1, 1)));
    CHECK(!is_big(fan, cls(1, 1)));
    CHECK(!is_nef(fan, cls(0, -1))); // E
    CHECK(!is_nef(fan, cls(1, 2)));
    CHECK(!is_ample(fan, cls(2, 2)));
    CHECK(is_nef(fan, cls(2, 2)));

    for (long a = 1; a <= 4; ++a)
        for (long b = 0; b <= 4; ++b) {
            CHECK(is_ample(fan, cls(a, b)) == (0 < b && b < a));
            CHECK(is_globally_generated(fan, cls(a, b)) == is_nef(fan, cls(a, b)));
        }
}

TEST_CASE("effectivity and integrality flags") {
    CHECK(is_effective(td({1, 0, 2, 0})));
    CHECK(!is_effective(td({1, 0, -1, 0})));
    CHECK(is_integral(td({1, 0, 2, 0})));
    TDivisor half;
    half.coeffs = {Rational(1, 2), Rational(0)};
    CHECK(!is_integral(half));
    CHECK(is_zero(td({0, 0})));
    CHECK(!is_zero(td({0, 1})));
}

TEST_CASE("canonical divisor and class coordinates") {
    const Builtin& p2 = builtin("p2");
    TDivisor minus_k = td({0, 0, 0}) - canonical_divisor(p2.fan);
    CHECK(is_ample(p2.fan, minus_k));
    NSBasis basis = NSBasis::make(p2.fan, p2.class_basis);
    auto coords = class_coordinates(p2.fan, minus_k, basis);
    REQUIRE(coords.size() == 1);
    CHECK(coords[0] == 3);

    const Builtin& bl = builtin("bl_p2");
    TDivisor minus_kb = td({0, 0, 0, 0}) - canonical_divisor(bl.fan);
    NSBasis dict = NSBasis::make(bl.fan, bl.class_basis);
    auto cb = class_coordinates(bl.fan, minus_kb, dict);
    REQUIRE(cb.size() == 2);
    CHECK(cb[0] == 3); // -K = 3H - E
    CHECK(cb[1] == 1);

    // coordinates are invariant under linear equivalence
    TDivisor rep = from_class("bl_p2", {3, 1});
    auto cr = class_coordinates(bl.fan, rep, dict);
    CHECK(cr == cb);

    NSBasis mixed = NSBasis::make(bl.fan, {from_class("bl_p2", {1, 1}), from_class("bl_p2", {1, 0})});
    auto cm = class_coordinates(bl.fan, rep, mixed);
    REQUIRE(cm.size() == 2);
    CHECK(cm[0] == 1); // 3H - E = (H - E) + 2H
    CHECK(cm[1] == 2);
}

TEST_CASE("a degenerate basis is rejected") {
    const Fan& fan = builtin("bl_p2").fan;
    CHECK_THROWS_WITH_AS(NSBasis::make(fan, {from_class("bl_p2", {1, 0}), from_class("bl_p2", {2, 0})}),
                         doctest::Contains("basis deficient"), precondition_error);
    CHECK_THROWS_AS(NSBasis::make(fan, {from_class("bl_p2", {1, 0})}), precondition_error);
}

TEST_CASE("volume of divisor classes") {
    CHECK(volume_of_divisor(builtin("p2").fan, from_class("p2", {3})) == 9);
    CHECK(volume_of_divisor(builtin("p3").fan, from_class("p3", {2})) == 8);
    for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b) {
            CHECK(volume_of_divisor(builtin("p1xp1").fan, from_class("p1xp1", {a, b})) == 2 * a * b);
            if (b < a)
                CHECK(volume_of_divisor(builtin("bl_p2").fan, from_class("bl_p2", {a, b})) ==
                      a * a - b * b);
        }
}

TEST_CASE("primitive facet forms of the cone over P x {1}") {
    auto forms = cone_facet_normals(divisor_polytope(builtin("p1xp1").fan, from_class("p1xp1", {1, 1})));
    REQUIRE(forms.size() == 4);
    CHECK(forms[0] == zv({-1, 0, 1}));
    CHECK(forms[1] == zv({0, -1, 1}));
    CHECK(forms[2] == zv({0, 1, 0}));
    CHECK(forms[3] == zv({1, 0, 0}));
}

TEST_CASE("norms") {
    CHECK(norm_sup({Rational(-3), Rational(2)}) == 3);
    CHECK(norm_sup({Rational(1, 2)}) == Rational(1, 2));
}

TEST_CASE("fan JSON round trip") {
    const Fan& fan = builtin("p1xp1").fan;
    Fan back = fan_from_json(fan_to_json(fan));
    CHECK(back.dim == fan.dim);
    CHECK(back.rays == fan.rays);
    CHECK(back.max_cones == fan.max_cones);

    std::string path = "test_fan_roundtrip.json";
    {
        std::ofstream out(path);
        out << fan_to_json(cube_fan());
    }
    Fan loaded = load_variety(path);
    CHECK(loaded.dim == 3);
    CHECK(loaded.rays.size() == 8);
    std::remove(path.c_str());

    CHECK_THROWS_AS(fan_from_json("{ not json"), input_error);
    CHECK_THROWS_AS(fan_from_json(R"({"name":"x","dim":2})"), input_error);
    CHECK_THROWS_AS(load_variety("no_such_variety"), input_error);
}

TEST_CASE("non-Cartier divisors are rejected by the support function") {
    Fan cube = cube_fan();
    TDivisor anti = td({1, 1, 1, 1, 1, 1, 1, 1}); // polar octahedron: Cartier, ample
    CHECK(is_ample(cube, anti));
    TDivisor crooked = td({1, 1, 1, 1, 1, 1, 1, 2});
    CHECK_THROWS_WITH_AS(is_nef(cube, crooked), doctest::Contains("not Cartier"),
                         precondition_error);
}

TEST_CASE("divisor parsing") {
    VarietySpec v = resolve_variety("bl_p2");
    REQUIRE(v.dict != nullptr);

    CHECK(parse_class_string(*v.dict, "2,1").coeffs == from_class("bl_p2", {2, 1}).coeffs);
    CHECK(parse_class_string(*v.dict, "2H-1E").coeffs == from_class("bl_p2", {2, 1}).coeffs);
    CHECK(parse_class_string(*v.dict, "H-E").coeffs == from_class("bl_p2", {1, 1}).coeffs);
    CHECK(parse_class_string(*v.dict, "3H").coeffs == from_class("bl_p2", {3, 0}).coeffs);
    CHECK(parse_coeff_list(v, "2,-1").coeffs == from_class("bl_p2", {2, 1}).coeffs);
    CHECK(parse_coeff_list(v, "0,0,2,-1").coeffs == from_class("bl_p2", {2, 1}).coeffs);
    CHECK(parse_spec(v, "rays:0,0,2,-1").coeffs == from_class("bl_p2", {2, 1}).coeffs);

    CHECK_THROWS_AS(parse_class_string(*v.dict, "2H-1X"), input_error);
    CHECK_THROWS_AS(parse_class_string(*v.dict, "1,2,3"), input_error);
    CHECK_THROWS_AS(parse_class_string(*v.dict, ""), input_error);
    CHECK_THROWS_AS(parse_coeff_list(v, "1,2,3"), input_error);
    CHECK_THROWS_AS(parse_divisor_option(v, "2,-1", "2H-1E"), input_error);
    CHECK_THROWS_AS(parse_divisor_option(v, "", ""), input_error);

    VarietySpec q = resolve_variety("p1xp1");
    CHECK(parse_class_string(*q.dict, "1,2").coeffs == from_class("p1xp1", {1, 2}).coeffs);
    CHECK(parse_class_string(*q.dict, "1F1+2F2").coeffs == from_class("p1xp1", {1, 2}).coeffs);

    VarietySpec line = resolve_variety("p1");
    CHECK(parse_class_string(*line.dict, "2").coeffs == from_class("p1", {2}).coeffs);
    CHECK(parse_class_string(*line.dict, "2H").coeffs == from_class("p1", {2}).coeffs);
}
