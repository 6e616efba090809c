#include "fsig/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "fsig/errors.hpp"

namespace fsig {

namespace {

Int gcd_abs(const ZVec& v) {
    Int g = 0;
    for (const auto& x : v) {
        Int a = abs(x);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    return g;
}

void enumerate_subsets(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

AffineForm::AffineForm(ZVec n, Rational off) : normal(std::move(n)), offset(std::move(off)) {
    offset.canonicalize();
    Int g = gcd_abs(normal);
    if (g > 1) {
        for (auto& x : normal) x /= g;
        offset /= Rational(g);
    }
}

Rational AffineForm::eval(const QVec& x) const {
    Rational acc = offset;
    for (size_t i = 0; i < normal.size(); ++i) acc += Rational(normal[i]) * x[i];
    return acc;
}

HPolytope::HPolytope(int d, std::vector<AffineForm> fs) : dim(d), forms(std::move(fs)) {
    if (dim < 1) throw input_error("polytope ambient dimension must be positive");
    for (const auto& f : forms)
        if (static_cast<int>(f.normal.size()) != dim)
            throw input_error("form dimension mismatch");
}

bool HPolytope::contains(const QVec& x) const {
    for (const auto& f : forms)
        if (f.eval(x) < 0) return false;
    return true;
}

ZVec primitive(const ZVec& v) {
    Int g = gcd_abs(v);
    if (g == 0) throw input_error("primitive: zero vector");
    ZVec w = v;
    for (auto& x : w) x /= g;
    return w;
}

std::optional<QVec> solve_affine(const std::vector<std::pair<ZVec, Rational>>& eqs, int dim) {
    QMat a;
    QVec b;
    for (const auto& [n, rhs] : eqs) {
        QVec row(dim);
        for (int j = 0; j < dim; ++j) row[j] = Rational(n[j]);
        a.push_back(std::move(row));
        b.push_back(rhs);
    }
    return solve_unique(a, b);
}

// ---- feasibility by Fourier-Motzkin elimination -----------------------------

namespace {

struct QForm {
    QVec normal;
    Rational offset;
};

// Positive-scale canonical key used to deduplicate half-spaces.
std::vector<Rational> canon_key(const QForm& f) {
    std::vector<Rational> key = f.normal;
    key.push_back(f.offset);
    Rational scale = 0;
    for (const auto& x : key)
        if (x != 0) { scale = abs_q(x); break; }
    if (scale != 0)
        for (auto& x : key) x /= scale;
    return key;
}

bool feasible_rec(std::vector<QForm> forms, int dim) {
    while (true) {
        // constant constraints
        std::vector<QForm> kept;
        for (auto& f : forms) {
            bool zero = true;
            for (const auto& x : f.normal)
                if (x != 0) { zero = false; break; }
            if (zero) {
                if (f.offset < 0) return false;
            } else {
                kept.push_back(std::move(f));
            }
        }
        forms = std::move(kept);
        if (dim == 0 || forms.empty()) return true;

        if (dim == 1) {
            // a*x + c >= 0: lower bounds from a > 0, upper from a < 0
            bool has_lo = false, has_hi = false;
            Rational lo = 0, hi = 0;
            for (const auto& f : forms) {
                Rational bound = -f.offset / f.normal[0];
                if (f.normal[0] > 0) {
                    if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
                } else {
                    if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
                }
            }
            return !(has_lo && has_hi) || lo <= hi;
        }

        std::vector<QForm> zero, pos, neg;
        for (auto& f : forms) {
            const Rational& c = f.normal[dim - 1];
            (c == 0 ? zero : (c > 0 ? pos : neg)).push_back(std::move(f));
        }
        std::vector<QForm> next;
        std::set<std::vector<Rational>> seen;
        auto push = [&](QForm f) {
            f.normal.resize(dim - 1);
            auto key = canon_key(f);
            if (seen.insert(key).second) next.push_back(std::move(f));
        };
        for (auto& f : zero) push(f);
        for (const auto& p : pos)
            for (const auto& n : neg) {
                QForm f;
                f.normal.resize(dim);
                const Rational cp = p.normal[dim - 1], cn = -n.normal[dim - 1];
                for (int j = 0; j < dim; ++j) f.normal[j] = cn * p.normal[j] + cp * n.normal[j];
                f.offset = cn * p.offset + cp * n.offset;
                push(std::move(f));
            }
        forms = std::move(next);
        --dim;
    }
}

} // namespace

bool is_feasible(const HPolytope& p) {
    std::vector<QForm> fs;
    for (const auto& f : p.forms) {
        QForm g;
        g.normal.resize(p.dim);
        for (int j = 0; j < p.dim; ++j) g.normal[j] = Rational(f.normal[j]);
        g.offset = f.offset;
        fs.push_back(std::move(g));
    }
    return feasible_rec(std::move(fs), p.dim);
}

// ---- boundedness ------------------------------------------------------------

namespace {

// A nonzero direction y with normal_i . y >= 0 for every form, if one exists.
std::optional<ZVec> recession_direction(const HPolytope& p) {
    const int d = p.dim;
    const int f = static_cast<int>(p.forms.size());
    QMat normals(f, QVec(d));
    for (int i = 0; i < f; ++i)
        for (int j = 0; j < d; ++j) normals[i][j] = Rational(p.forms[i].normal[j]);

    if (rank(normals) < d) {
        auto y = kernel_vector(normals, d);
        return primitive_direction(*y); // lineality direction
    }

    auto admits = [&](const QVec& y) {
        for (int i = 0; i < f; ++i) {
            Rational s = 0;
            for (int j = 0; j < d; ++j) s += normals[i][j] * y[j];
            if (s < 0) return false;
        }
        return true;
    };

    std::optional<ZVec> found;
    enumerate_subsets(f, d - 1, [&](const std::vector<int>& idx) {
        if (found) return;
        QMat sub;
        for (int i : idx) sub.push_back(normals[i]);
        if (rank(sub) != d - 1) return;
        auto y = kernel_vector(sub, d);
        if (!y) return;
        if (admits(*y)) { found = primitive_direction(*y); return; }
        QVec neg(d);
        for (int j = 0; j < d; ++j) neg[j] = -(*y)[j];
        if (admits(neg)) found = primitive_direction(neg);
    });
    return found;
}

} // namespace

bool is_bounded(const HPolytope& p) {
    if (!is_feasible(p)) return true; // the empty set is bounded
    return !recession_direction(p).has_value();
}

VRep vertex_enumeration(const HPolytope& p) {
    if (!is_bounded(p)) throw precondition_error("polytope unbounded");
    const int d = p.dim;
    const int f = static_cast<int>(p.forms.size());
    std::set<QVec> verts;
    enumerate_subsets(f, d, [&](const std::vector<int>& idx) {
        std::vector<std::pair<ZVec, Rational>> eqs;
        for (int i : idx) eqs.emplace_back(p.forms[i].normal, Rational(-p.forms[i].offset));
        auto x = solve_affine(eqs, d);
        if (x && p.contains(*x)) verts.insert(*x);
    });
    VRep v;
    v.vertices.assign(verts.begin(), verts.end());
    std::sort(v.vertices.begin(), v.vertices.end(), lex_less);
    return v;
}

bool is_full_dimensional(const HPolytope& p) {
    if (!is_bounded(p)) throw precondition_error("is_full_dimensional requires a bounded polytope");
    auto v = vertex_enumeration(p);
    return affine_dim(v.vertices) == p.dim;
}

std::optional<QVec> interior_point(const HPolytope& p) {
    if (!is_bounded(p)) throw precondition_error("interior_point requires a bounded polytope");
    auto v = vertex_enumeration(p);
    if (affine_dim(v.vertices) < p.dim) return std::nullopt;
    QVec c(p.dim, Rational(0));
    for (const auto& vert : v.vertices)
        for (int j = 0; j < p.dim; ++j) c[j] += vert[j];
    for (auto& x : c) x /= Rational(static_cast<long>(v.vertices.size()));
    return c;
}

// ---- volume by recursive face triangulation ---------------------------------

namespace {

struct Triangulator {
    const std::vector<QVec>& verts;
    const std::vector<AffineForm>& forms;

    bool tight(int form_idx, int vert_idx) const {
        return forms[form_idx].eval(verts[vert_idx]) == 0;
    }

    std::vector<QVec> points_of(const std::vector<int>& face) const {
        std::vector<QVec> pts;
        for (int i : face) pts.push_back(verts[i]);
        return pts;
    }

    // Simplices (as vertex index tuples) of a k-dimensional face, coning each
    // facet avoiding the lex-min vertex.
    std::vector<std::vector<int>> run(const std::vector<int>& face, int k) const {
        if (k == 0) return {face};
        const int apex = face[0];
        std::set<std::vector<int>> facets;
        for (size_t fi = 0; fi < forms.size(); ++fi) {
            std::vector<int> t;
            for (int vi : face)
                if (tight(static_cast<int>(fi), vi)) t.push_back(vi);
            if (t.size() == face.size() || t.empty()) continue;
            if (affine_dim(points_of(t)) == k - 1) facets.insert(std::move(t));
        }
        std::vector<std::vector<int>> out;
        for (const auto& t : facets) {
            if (std::find(t.begin(), t.end(), apex) != t.end()) continue;
            for (auto s : run(t, k - 1)) {
                s.push_back(apex);
                out.push_back(std::move(s));
            }
        }
        return out;
    }
};

Rational simplex_volume(const std::vector<QVec>& pts) {
    const int d = static_cast<int>(pts.size()) - 1;
    QMat m(d, QVec(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m[i][j] = pts[i + 1][j] - pts[0][j];
    Rational det = determinant(std::move(m));
    Rational fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    return abs_q(det) / fact;
}

} // namespace

Rational volume(const HPolytope& p) {
    auto v = vertex_enumeration(p);
    if (affine_dim(v.vertices) < p.dim) return 0;
    std::vector<int> all(v.vertices.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    Triangulator tri{v.vertices, p.forms};
    Rational total = 0;
    for (const auto& s : tri.run(all, p.dim)) {
        std::vector<QVec> pts;
        for (int i : s) pts.push_back(v.vertices[i]);
        total += simplex_volume(pts);
    }
    return total;
}

Rational volume_from_interior(const HPolytope& p) {
    auto v = vertex_enumeration(p);
    if (affine_dim(v.vertices) < p.dim) return 0;
    auto center = interior_point(p);
    std::vector<int> all(v.vertices.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    Triangulator tri{v.vertices, p.forms};
    std::set<std::vector<int>> facets;
    for (size_t fi = 0; fi < p.forms.size(); ++fi) {
        std::vector<int> t;
        for (int vi : all)
            if (tri.tight(static_cast<int>(fi), vi)) t.push_back(vi);
        if (t.empty() || t.size() == all.size()) continue;
        if (affine_dim(tri.points_of(t)) == p.dim - 1) facets.insert(std::move(t));
    }
    Rational total = 0;
    for (const auto& facet : facets)
        for (const auto& s : tri.run(facet, p.dim - 1)) {
            std::vector<QVec> pts{*center};
            for (int i : s) pts.push_back(v.vertices[i]);
            total += simplex_volume(pts);
        }
    return total;
}

// ---- lattice points ---------------------------------------------------------

namespace {

struct ScanBox {
    std::vector<long> lo, hi; // exact integer bounds, empty box flagged
    bool empty = false;
};

ScanBox bounding_box(const HPolytope& p) {
    ScanBox box;
    auto v = vertex_enumeration(p);
    if (v.vertices.empty()) {
        box.empty = true;
        return box;
    }
    for (int j = 0; j < p.dim; ++j) {
        Rational mn = v.vertices[0][j], mx = mn;
        for (const auto& vert : v.vertices) {
            if (vert[j] < mn) mn = vert[j];
            if (vert[j] > mx) mx = vert[j];
        }
        Int lo = ceil_q(mn), hi = floor_q(mx);
        if (lo > hi) { box.empty = true; return box; }
        if (!lo.fits_slong_p() || !hi.fits_slong_p())
            throw precondition_error("lattice scan bounds exceed machine range");
        box.lo.push_back(lo.get_si());
        box.hi.push_back(hi.get_si());
    }
    return box;
}

// forms with denominators cleared: normal . x + offset >= 0 over Z
struct ZForm {
    ZVec normal;
    Int offset;
};

std::vector<ZForm> cleared_forms(const HPolytope& p) {
    std::vector<ZForm> zf;
    for (const auto& f : p.forms) {
        ZForm g;
        Int den(f.offset.get_den());
        g.normal.reserve(f.normal.size());
        for (const auto& a : f.normal) g.normal.push_back(a * den);
        g.offset = Int(f.offset.get_num());
        zf.push_back(std::move(g));
    }
    return zf;
}

template <typename Visit>
void scan(const HPolytope& p, Visit visit) {
    auto box = bounding_box(p);
    if (box.empty) return;
    auto zf = cleared_forms(p);
    const int d = p.dim;
    std::vector<long> x = box.lo;
    ZVec zx(d);
    while (true) {
        for (int j = 0; j < d; ++j) zx[j] = x[j];
        bool inside = true;
        for (const auto& f : zf) {
            Int acc = f.offset;
            for (int j = 0; j < d; ++j) acc += f.normal[j] * zx[j];
            if (acc < 0) { inside = false; break; }
        }
        if (inside && !visit(zx)) return;
        int j = d - 1;
        while (j >= 0 && x[j] == box.hi[j]) { x[j] = box.lo[j]; --j; }
        if (j < 0) break;
        ++x[j];
    }
}

} // namespace

Int scan_box_cardinality(const HPolytope& p) {
    auto box = bounding_box(p);
    if (box.empty) return 0;
    Int card = 1;
    for (size_t j = 0; j < box.lo.size(); ++j) card *= Int(box.hi[j] - box.lo[j] + 1);
    return card;
}

std::vector<ZVec> lattice_points(const HPolytope& p) {
    if (!is_bounded(p)) throw precondition_error("lattice_points requires a bounded polytope");
    std::vector<ZVec> pts;
    scan(p, [&](const ZVec& x) {
        pts.push_back(x);
        return true;
    });
    return pts; // scan order is lexicographic
}

bool has_lattice_point(const HPolytope& p) {
    if (!is_bounded(p)) throw precondition_error("has_lattice_point requires a bounded polytope");
    bool found = false;
    scan(p, [&](const ZVec&) {
        found = true;
        return false;
    });
    return found;
}

HPolytope dilate(const HPolytope& p, const Rational& lambda) {
    if (lambda <= 0) throw input_error("dilation factor must be positive");
    std::vector<AffineForm> fs;
    fs.reserve(p.forms.size());
    for (const auto& f : p.forms) fs.emplace_back(f.normal, f.offset * lambda);
    return HPolytope(p.dim, std::move(fs));
}

HPolytope slice_last_coord(const HPolytope& p, const Int& m) {
    if (p.dim < 2) throw input_error("slice_last_coord requires ambient dimension >= 2");
    std::vector<AffineForm> fs;
    for (const auto& f : p.forms) {
        ZVec n(f.normal.begin(), f.normal.end() - 1);
        fs.emplace_back(std::move(n), f.offset + Rational(f.normal.back() * m));
    }
    return HPolytope(p.dim - 1, std::move(fs));
}

} // namespace fsig
