#include "fsig/toric.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"

#include "fsig/errors.hpp"

namespace fsig {

namespace {

void check_coeff_count(const Fan& fan, const TDivisor& d) {
    if (d.coeffs.size() != fan.rays.size())
        throw input_error("divisor has " + std::to_string(d.coeffs.size()) +
                          " coefficients, fan has " + std::to_string(fan.rays.size()) + " rays");
}

// deterministic sample of nonzero integer directions
std::vector<ZVec> sample_directions(int dim, int count) {
    std::vector<ZVec> dirs;
    unsigned long state = 123456789UL;
    auto next = [&] {
        state = (1103515245UL * state + 12345UL) % 2147483648UL;
        return static_cast<long>(state % 21UL) - 10;
    };
    while (static_cast<int>(dirs.size()) < count) {
        ZVec v(dim);
        bool zero = true;
        for (int j = 0; j < dim; ++j) {
            v[j] = next();
            if (v[j] != 0) zero = false;
        }
        if (!zero) dirs.push_back(std::move(v));
    }
    return dirs;
}

QVec to_qvec(const ZVec& v) {
    QVec q(v.size());
    for (size_t i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
    return q;
}

} // namespace

bool cone_contains(const std::vector<ZVec>& rays, const QVec& x) {
    const int d = static_cast<int>(x.size());
    bool all_zero = true;
    for (const auto& c : x)
        if (c != 0) { all_zero = false; break; }
    if (all_zero) return true;

    // Caratheodory: x lies in the cone iff it is a nonnegative combination of
    // some linearly independent subset of the rays.
    const int n = static_cast<int>(rays.size());
    std::vector<int> subset;
    std::function<bool(int, int)> search = [&](int start, int k) -> bool {
        if (k == 0) {
            QMat a(d, QVec(subset.size()));
            for (int i = 0; i < d; ++i)
                for (size_t j = 0; j < subset.size(); ++j)
                    a[i][j] = Rational(rays[subset[j]][i]);
            QVec b(x.begin(), x.end());
            auto lam = solve_unique(a, b);
            if (!lam) return false;
            for (const auto& l : *lam)
                if (l < 0) return false;
            return true;
        }
        for (int i = start; i <= n - k; ++i) {
            subset.push_back(i);
            if (search(i + 1, k - 1)) { subset.pop_back(); return true; }
            subset.pop_back();
        }
        return false;
    };
    for (int k = 1; k <= d && k <= n; ++k)
        if (search(0, k)) return true;
    return false;
}

Fan Fan::make(int dim, std::vector<ZVec> rays, std::vector<std::vector<int>> max_cones,
              std::string name) {
    if (dim < 1) throw input_error("fan dimension must be positive");
    std::set<ZVec> seen;
    for (const auto& r : rays) {
        if (static_cast<int>(r.size()) != dim) throw input_error("ray dimension mismatch");
        if (r != primitive(r)) throw input_error("fan rays must be primitive");
        if (!seen.insert(r).second) throw input_error("fan rays must be distinct");
    }
    for (const auto& cone : max_cones) {
        if (cone.empty()) throw input_error("empty maximal cone");
        QMat m;
        for (int i : cone) {
            if (i < 0 || i >= static_cast<int>(rays.size()))
                throw input_error("cone ray index out of range");
            m.push_back(to_qvec(rays[i]));
        }
        if (rank(m) != dim) throw input_error("maximal cone is not full-dimensional");
    }

    Fan fan;
    fan.dim = dim;
    fan.rays = std::move(rays);
    fan.max_cones = std::move(max_cones);
    fan.name = std::move(name);

    for (const auto& dir : sample_directions(dim, 1000)) {
        QVec x = to_qvec(dir);
        bool covered = false;
        for (const auto& cone : fan.max_cones) {
            std::vector<ZVec> cr;
            for (int i : cone) cr.push_back(fan.rays[i]);
            if (cone_contains(cr, x)) { covered = true; break; }
        }
        if (!covered)
            throw input_error("fan not complete: direction " + format_point(x) + " uncovered");
    }
    return fan;
}

TDivisor operator+(const TDivisor& a, const TDivisor& b) {
    if (a.coeffs.size() != b.coeffs.size()) throw input_error("divisor size mismatch");
    TDivisor r = a;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

TDivisor operator-(const TDivisor& a, const TDivisor& b) {
    if (a.coeffs.size() != b.coeffs.size()) throw input_error("divisor size mismatch");
    TDivisor r = a;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
}

TDivisor operator*(const Rational& k, const TDivisor& d) {
    TDivisor r = d;
    for (auto& c : r.coeffs) c *= k;
    return r;
}

HPolytope divisor_polytope(const Fan& fan, const TDivisor& d) {
    check_coeff_count(fan, d);
    std::vector<AffineForm> fs;
    fs.reserve(fan.rays.size());
    for (size_t i = 0; i < fan.rays.size(); ++i) fs.emplace_back(fan.rays[i], d.coeffs[i]);
    return HPolytope(fan.dim, std::move(fs));
}

namespace {

// One support-function vertex u_sigma per maximal cone: <u, v_rho> = -c_rho on
// the cone's rays.  Unsolvable on some cone means the divisor is not Cartier.
std::vector<QVec> support_vectors(const Fan& fan, const TDivisor& d) {
    check_coeff_count(fan, d);
    std::vector<QVec> us;
    for (const auto& cone : fan.max_cones) {
        QMat a;
        QVec b;
        for (int i : cone) {
            a.push_back(to_qvec(fan.rays[i]));
            b.push_back(-d.coeffs[i]);
        }
        auto u = solve_unique(a, b);
        if (!u) throw precondition_error("divisor not Cartier");
        us.push_back(std::move(*u));
    }
    return us;
}

} // namespace

bool is_nef(const Fan& fan, const TDivisor& d) {
    auto us = support_vectors(fan, d);
    for (size_t c = 0; c < fan.max_cones.size(); ++c)
        for (size_t i = 0; i < fan.rays.size(); ++i) {
            Rational s = 0;
            for (int j = 0; j < fan.dim; ++j) s += us[c][j] * Rational(fan.rays[i][j]);
            if (s < -d.coeffs[i]) return false;
        }
    return true;
}

bool is_ample(const Fan& fan, const TDivisor& d) {
    auto us = support_vectors(fan, d);
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        const auto& cone = fan.max_cones[c];
        for (size_t i = 0; i < fan.rays.size(); ++i) {
            Rational s = 0;
            for (int j = 0; j < fan.dim; ++j) s += us[c][j] * Rational(fan.rays[i][j]);
            const bool in_cone = std::find(cone.begin(), cone.end(), static_cast<int>(i)) != cone.end();
            if (in_cone ? (s != -d.coeffs[i]) : (s <= -d.coeffs[i])) return false;
        }
    }
    return true;
}

bool is_globally_generated(const Fan& fan, const TDivisor& d) {
    // on a complete toric variety a divisor is globally generated iff nef
    return is_nef(fan, d);
}

bool is_big(const Fan& fan, const TDivisor& d) {
    return is_full_dimensional(divisor_polytope(fan, d));
}

bool is_effective(const TDivisor& d) {
    for (const auto& c : d.coeffs)
        if (c < 0) return false;
    return true;
}

bool is_integral(const TDivisor& d) {
    for (const auto& c : d.coeffs)
        if (!is_integer(c)) return false;
    return true;
}

bool is_zero(const TDivisor& d) {
    for (const auto& c : d.coeffs)
        if (c != 0) return false;
    return true;
}

std::vector<ZVec> cone_facet_normals(const HPolytope& p) {
    if (!is_bounded(p)) throw precondition_error("cone_facet_normals requires a bounded polytope");
    auto v = vertex_enumeration(p);
    if (affine_dim(v.vertices) != p.dim)
        throw precondition_error("cone_facet_normals requires a full-dimensional polytope");

    std::set<ZVec> out;
    std::set<std::pair<ZVec, Rational>> seen;
    for (const auto& f : p.forms) {
        std::vector<QVec> tight;
        for (const auto& vert : v.vertices)
            if (f.eval(vert) == 0) tight.push_back(vert);
        if (affine_dim(tight) != p.dim - 1) continue; // redundant half-space
        if (!seen.insert({f.normal, f.offset}).second) continue;
        QVec lifted(p.dim + 1);
        for (int j = 0; j < p.dim; ++j) lifted[j] = Rational(f.normal[j]);
        lifted[p.dim] = f.offset;
        out.insert(primitive_direction(lifted));
    }
    return {out.begin(), out.end()};
}

Rational volume_of_divisor(const Fan& fan, const TDivisor& d) {
    Rational fact = 1;
    for (int i = 2; i <= fan.dim; ++i) fact *= i;
    return fact * volume(divisor_polytope(fan, d));
}

TDivisor canonical_divisor(const Fan& fan) {
    TDivisor k;
    k.coeffs.assign(fan.rays.size(), Rational(-1));
    return k;
}

int picard_rank(const Fan& fan) {
    QMat vt;
    for (const auto& r : fan.rays) vt.push_back(to_qvec(r));
    return static_cast<int>(fan.rays.size()) - rank(vt);
}

namespace {

// rows indexed by rays: [basis coeffs | <., v_rho> relations], rhs = coeffs(D)
struct ClassSystem {
    QMat a;
    int k;
};

ClassSystem class_system(const Fan& fan, const NSBasis& basis) {
    const int n = static_cast<int>(fan.rays.size());
    const int k = static_cast<int>(basis.classes.size());
    QMat a(n, QVec(k + fan.dim, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) a[i][j] = basis.classes[j].coeffs[i];
        for (int l = 0; l < fan.dim; ++l) a[i][k + l] = Rational(fan.rays[i][l]);
    }
    return {std::move(a), k};
}

bool coordinates_unique(const Fan& fan, const NSBasis& basis) {
    auto sys = class_system(fan, basis);
    QMat vt;
    for (const auto& r : fan.rays) vt.push_back(to_qvec(r));
    return rank(sys.a) == sys.k + rank(vt);
}

} // namespace

NSBasis NSBasis::make(const Fan& fan, std::vector<TDivisor> classes) {
    NSBasis b;
    b.classes = std::move(classes);
    for (const auto& c : b.classes) check_coeff_count(fan, c);
    if (static_cast<int>(b.classes.size()) != picard_rank(fan) || !coordinates_unique(fan, b))
        throw precondition_error("basis deficient: classes do not form a basis of the divisor class group");
    for (const auto& c : b.classes) {
        b.ample.push_back(is_ample(fan, c));
        b.globally_generated.push_back(is_globally_generated(fan, c));
    }
    return b;
}

QVec class_coordinates(const Fan& fan, const TDivisor& d, const NSBasis& basis) {
    check_coeff_count(fan, d);
    if (!coordinates_unique(fan, basis))
        throw precondition_error("basis deficient: classes do not form a basis of the divisor class group");
    auto sys = class_system(fan, basis);
    auto x = solve_any(sys.a, d.coeffs);
    if (!x) throw precondition_error("divisor class not in basis span");
    return QVec(x->begin(), x->begin() + sys.k);
}

Rational norm_sup(const QVec& coords) {
    Rational m = 0;
    for (const auto& c : coords) m = std::max(m, abs_q(c));
    return m;
}

// ---- builtin catalog ----------------------------------------------------

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

Builtin make_projective_space(int d, const std::string& name) {
    std::vector<ZVec> rays;
    for (int i = 0; i < d; ++i) {
        ZVec e(d, Int(0));
        e[i] = 1;
        rays.push_back(std::move(e));
    }
    rays.push_back(ZVec(d, Int(-1)));
    std::vector<std::vector<int>> cones;
    for (int skip = 0; skip <= d; ++skip) {
        std::vector<int> cone;
        for (int i = 0; i <= d; ++i)
            if (i != skip) cone.push_back(i);
        cones.push_back(std::move(cone));
    }
    Builtin b;
    b.fan = Fan::make(d, std::move(rays), std::move(cones), name);
    b.class_rank = 1;
    TDivisor h;
    h.coeffs.assign(d + 1, Rational(0));
    h.coeffs[d] = 1;
    b.class_basis = {h};
    b.class_names = "m (the class mH)";
    b.coord_names = {"m"};
    b.symbols = {"H"};
    b.generators = {h};
    return b;
}

std::map<std::string, Builtin> make_catalog() {
    std::map<std::string, Builtin> cat;
    cat["p1"] = make_projective_space(1, "p1");
    cat["p2"] = make_projective_space(2, "p2");
    cat["p3"] = make_projective_space(3, "p3");

    Builtin q;
    q.fan = Fan::make(2, {zv({1, 0}), zv({-1, 0}), zv({0, 1}), zv({0, -1})},
                      {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, "p1xp1");
    q.class_rank = 2;
    q.class_basis = {td({0, 1, 0, 0}), td({0, 0, 0, 1})};
    q.class_names = "(a,b) (the class a F1 + b F2)";
    q.coord_names = {"a", "b"};
    q.symbols = {"F1", "F2"};
    q.generators = q.class_basis;
    cat["p1xp1"] = std::move(q);

    Builtin bl;
    bl.fan = Fan::make(2, {zv({1, 0}), zv({0, 1}), zv({-1, -1}), zv({1, 1})},
                       {{0, 3}, {3, 1}, {1, 2}, {2, 0}}, "bl_p2");
    bl.class_rank = 2;
    bl.class_basis = {td({0, 0, 1, 0}), td({0, 0, 0, -1})};
    bl.class_names = "(a,b) (the class aH - bE)";
    bl.coord_names = {"a", "b"};
    bl.symbols = {"H", "E"};
    bl.generators = {td({0, 0, 1, 0}), td({0, 0, 0, 1})};
    cat["bl_p2"] = std::move(bl);
    return cat;
}

const std::map<std::string, Builtin>& catalog() {
    static const std::map<std::string, Builtin> cat = make_catalog();
    return cat;
}

} // namespace

std::vector<std::string> builtin_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : catalog()) names.push_back(k);
    return names;
}

const Builtin& builtin(const std::string& name) {
    auto it = catalog().find(name);
    if (it == catalog().end()) throw input_error("unknown variety '" + name + "'");
    return it->second;
}

TDivisor divisor_from_class(const Builtin& b, const QVec& coords) {
    if (static_cast<int>(coords.size()) != b.class_rank)
        throw input_error("class takes " + std::to_string(b.class_rank) + " coordinate(s)");
    TDivisor d;
    d.coeffs.assign(b.fan.rays.size(), Rational(0));
    for (int i = 0; i < b.class_rank; ++i) d = d + (coords[i] * b.class_basis[i]);
    return d;
}

Fan fan_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("variety file: ") + e.what());
    }
    try {
        const int dim = j.at("dim").get<int>();
        std::vector<ZVec> rays;
        for (const auto& r : j.at("rays")) {
            ZVec v;
            for (const auto& x : r) v.push_back(Int(x.get<long>()));
            rays.push_back(std::move(v));
        }
        std::vector<std::vector<int>> cones;
        for (const auto& c : j.at("max_cones")) cones.push_back(c.get<std::vector<int>>());
        std::string name = j.value("name", "");
        return Fan::make(dim, std::move(rays), std::move(cones), name);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("variety file: ") + e.what());
    }
}

std::string fan_to_json(const Fan& fan) {
    nlohmann::ordered_json j;
    j["name"] = fan.name;
    j["dim"] = fan.dim;
    auto rays = nlohmann::ordered_json::array();
    for (const auto& r : fan.rays) {
        auto row = nlohmann::ordered_json::array();
        for (const auto& x : r) row.push_back(x.get_si());
        rays.push_back(row);
    }
    j["rays"] = rays;
    j["max_cones"] = fan.max_cones;
    return j.dump(2);
}

Fan load_variety(const std::string& name_or_path) {
    if (catalog().count(name_or_path)) return builtin(name_or_path).fan;
    if (std::filesystem::exists(name_or_path)) {
        std::ifstream in(name_or_path);
        std::stringstream ss;
        ss << in.rdbuf();
        return fan_from_json(ss.str());
    }
    throw input_error("unknown variety '" + name_or_path + "'");
}

} // namespace fsig
