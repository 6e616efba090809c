#include "doctest.h"

#include <set>

#include "fsig/polytope.hpp"
#include "fsig/toric.hpp"

using namespace fsig;

namespace {

ZVec zv(std::initializer_list<long> xs) {
    ZVec v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

QVec qv(std::initializer_list<Rational> xs) { return QVec(xs); }

AffineForm af(std::initializer_list<long> normal, const Rational& off) {
    return AffineForm(zv(normal), off);
}

// unit square [0,1]^2
HPolytope square() {
    return HPolytope(2, {af({1, 0}, 0), af({0, 1}, 0), af({-1, 0}, 1), af({0, -1}, 1)});
}

// { x,y >= 0, 1 <= x+y <= 2 }
HPolytope trapezoid() {
    return HPolytope(2, {af({1, 0}, 0), af({0, 1}, 0), af({-1, -1}, 2), af({1, 1}, -1)});
}

HPolytope octahedron() {
    std::vector<AffineForm> fs;
    for (long sx : {1, -1})
        for (long sy : {1, -1})
            for (long sz : {1, -1}) fs.push_back(af({sx, sy, sz}, 1));
    return HPolytope(3, std::move(fs));
}

// deterministic rational points in [-1, 3]^dim
std::vector<QVec> pseudo_points(int dim, int count) {
    unsigned long state = 42;
    auto next = [&] {
        state = (6364136223846793005UL * state + 1442695040888963407UL);
        return (state >> 33) % 41UL;
    };
    std::vector<QVec> pts;
    for (int i = 0; i < count; ++i) {
        QVec p;
        for (int j = 0; j < dim; ++j) p.push_back(Rational(static_cast<long>(next())) / 10 - 1);
        pts.push_back(std::move(p));
    }
    return pts;
}

// membership in conv(vertices) via the cone over (v, 1)
bool in_hull(const std::vector<QVec>& vertices, const QVec& x) {
    std::vector<ZVec> rays;
    for (const auto& v : vertices) {
        QVec lifted = v;
        lifted.push_back(1);
        Int den = 1;
        for (const auto& c : lifted) den = lcm_z(den, Int(c.get_den()));
        ZVec r;
        for (const auto& c : lifted) r.push_back(floor_q(c * Rational(den)));
        rays.push_back(std::move(r));
    }
    QVec lifted = x;
    lifted.push_back(1);
    return cone_contains(rays, lifted);
}

} // namespace

TEST_CASE("rational parsing round-trips and rejects junk") {
    CHECK(parse_rational("5/12") == Rational(5, 12));
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("-1.5") == Rational(-3, 2));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    for (const char* bad : {"", "1/0", "1//2", "abc", "1.2.3", "2/-3", "1/", "/2", "--1", "1e3"})
        CHECK_THROWS_AS(parse_rational(bad), input_error);
    for (const Rational& q : {Rational(5, 12), Rational(-7, 3), Rational(0), Rational(41)})
        CHECK(parse_rational(to_string(q)) == q);
}

TEST_CASE("decimal rendering is fixed-width and rounded") {
    CHECK(to_decimal(Rational(5, 12)) == "0.416666666667");
    CHECK(to_decimal(Rational(1, 4)) == "0.250000000000");
    CHECK(to_decimal(Rational(2, 3)) == "0.666666666667");
    CHECK(to_decimal(Rational(-1, 8)) == "-0.125000000000");
    CHECK(to_decimal(Rational(3)) == "3.000000000000");
}

TEST_CASE("exact linear algebra") {
    QMat m = {qv({2, 1}), qv({1, 3})};
    CHECK(determinant(m) == 5);
    CHECK(rank(m) == 2);
    auto x = solve_unique(m, qv({4, 7}));
    REQUIRE(x);
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 2);

    QMat sing = {qv({1, 2}), qv({2, 4})};
    CHECK(rank(sing) == 1);
    CHECK(determinant(sing) == 0);
    CHECK(!solve_unique(sing, qv({1, 3})));
    auto k = kernel_vector(sing, 2);
    REQUIRE(k);
    CHECK((*k)[0] + 2 * (*k)[1] == 0);

    CHECK(affine_dim({qv({0, 0}), qv({1, 0}), qv({0, 1})}) == 2);
    CHECK(affine_dim({qv({0, 0}), qv({2, 2}), qv({1, 1})}) == 1);
    CHECK(affine_dim({qv({3, 4})}) == 0);
    CHECK(affine_dim({}) == -1);

    CHECK(primitive_direction(qv({Rational(1, 2), Rational(3, 4)})) == zv({2, 3}));
    CHECK_THROWS_AS(primitive_direction(qv({0, 0})), input_error);
}

TEST_CASE("feasibility and boundedness") {
    CHECK(is_feasible(square()));
    CHECK(is_bounded(square()));

    HPolytope empty(1, {af({1}, -1), af({-1}, 0)}); // x >= 1 and x <= 0
    CHECK(!is_feasible(empty));
    CHECK(is_bounded(empty)); // the empty set is bounded
    CHECK(volume(empty) == 0);

    HPolytope halfplane(2, {af({1, 0}, 0)});
    CHECK(is_feasible(halfplane));
    CHECK(!is_bounded(halfplane));

    HPolytope quadrant(2, {af({1, 0}, 0), af({0, 1}, 0)});
    CHECK(!is_bounded(quadrant));
    CHECK_THROWS_AS(vertex_enumeration(quadrant), precondition_error);
}

TEST_CASE("vertex enumeration is lex sorted and deduplicated") {
    auto sq = vertex_enumeration(square()).vertices;
    REQUIRE(sq.size() == 4);
    CHECK(sq[0] == qv({0, 0}));
    CHECK(sq[1] == qv({0, 1}));
    CHECK(sq[2] == qv({1, 0}));
    CHECK(sq[3] == qv({1, 1}));

    auto tz = vertex_enumeration(trapezoid()).vertices;
    REQUIRE(tz.size() == 4);
    CHECK(tz[0] == qv({0, 1}));
    CHECK(tz[1] == qv({0, 2}));
    CHECK(tz[2] == qv({1, 0}));
    CHECK(tz[3] == qv({2, 0}));

    // redundant forms do not add vertices
    HPolytope padded(2, {af({1, 0}, 0), af({0, 1}, 0), af({-1, 0}, 1), af({0, -1}, 1),
                         af({-1, -1}, 5)});
    CHECK(vertex_enumeration(padded).vertices == sq);
}

TEST_CASE("volume: pinned values, dilation law, two evaluation routes") {
    CHECK(volume(square()) == 1);
    CHECK(volume(trapezoid()) == Rational(3, 2));
    CHECK(volume(octahedron()) == Rational(4, 3));

    HPolytope triangle(2, {af({1, 0}, 0), af({0, 1}, 0), af({-1, -1}, 3)});
    CHECK(volume(triangle) == Rational(9, 2));

    for (const Rational& lam : {Rational(2), Rational(3, 2), Rational(7, 5)}) {
        CHECK(volume(dilate(trapezoid(), lam)) == pow_q(lam, 2) * volume(trapezoid()));
        CHECK(volume(dilate(octahedron(), lam)) == pow_q(lam, 3) * volume(octahedron()));
    }
    CHECK_THROWS_AS(dilate(square(), Rational(0)), input_error);
    CHECK_THROWS_AS(dilate(square(), Rational(-2)), input_error);

    for (const HPolytope& p : {square(), trapezoid(), octahedron(),
                               HPolytope(3, {af({1, 0, 0}, 0), af({0, 1, 0}, 0), af({0, 0, 1}, 0),
                                             af({-1, -2, -3}, 6), af({-1, -1, -1}, 3)})})
        CHECK(volume(p) == volume_from_interior(p));
}

TEST_CASE("degenerate polytopes have volume zero and no interior") {
    HPolytope segment(2, {af({1, 0}, 0), af({-1, 0}, 2), af({0, 1}, 0), af({0, -1}, 0)});
    CHECK(is_feasible(segment));
    CHECK(!is_full_dimensional(segment));
    CHECK(volume(segment) == 0);
    CHECK(!interior_point(segment));

    auto ip = interior_point(trapezoid());
    REQUIRE(ip);
    CHECK(trapezoid().contains(*ip));
}

TEST_CASE("hull membership agrees with the facet description") {
    for (const HPolytope& p : {square(), trapezoid()}) {
        auto verts = vertex_enumeration(p).vertices;
        for (const auto& x : pseudo_points(2, 100)) CHECK(p.contains(x) == in_hull(verts, x));
    }
}

TEST_CASE("lattice point scans") {
    auto pts = lattice_points(square());
    REQUIRE(pts.size() == 4);
    CHECK(pts.front() == zv({0, 0})); // lex order
    CHECK(pts.back() == zv({1, 1}));

    HPolytope triangle(2, {af({1, 0}, 0), af({0, 1}, 0), af({-1, -1}, 3)});
    CHECK(lattice_points(triangle).size() == 10);

    // counting measure converges to volume at perimeter rate
    HPolytope unit(2, {af({1, 0}, 0), af({0, 1}, 0), af({-1, -1}, 1)});
    for (long m : {4L, 8L, 16L}) {
        Rational count(static_cast<long>(lattice_points(dilate(unit, Rational(m))).size()));
        Rational err = abs_q(count / Rational(m * m) - Rational(1, 2));
        CHECK(err <= Rational(2) / m);
    }

    HPolytope tiny(2, {af({4, 0}, -1), af({0, 4}, -1), af({-4, -4}, 3)});
    CHECK(is_feasible(tiny));
    CHECK(!has_lattice_point(tiny));
    CHECK(has_lattice_point(square()));

    CHECK(scan_box_cardinality(square()) == 4);
    CHECK(scan_box_cardinality(dilate(square(), Rational(26))) == 27 * 27);
}

TEST_CASE("slicing the last coordinate") {
    // x in [0,2], y in [0,3]
    HPolytope box(2, {af({1, 0}, 0), af({0, 1}, 0), af({-1, 0}, 2), af({0, -1}, 3)});
    HPolytope s1 = slice_last_coord(box, 1);
    CHECK(s1.dim == 1);
    CHECK(lattice_points(s1).size() == 3);
    HPolytope s9 = slice_last_coord(box, 9);
    CHECK(!is_feasible(s9));
}

TEST_CASE("affine forms are canonicalized") {
    AffineForm f(zv({2, 4}), Rational(6));
    CHECK(f.normal == zv({1, 2}));
    CHECK(f.offset == 3);
    AffineForm g(zv({2, 4}), Rational(3));
    CHECK(g.normal == zv({1, 2}));
    CHECK(g.offset == Rational(3, 2));
}
