#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fsig/linalg.hpp"
#include "fsig/rational.hpp"

namespace fsig {

// Closed half-space  normal . x + offset >= 0.  The normal is an integer
// vector kept primitive (construction divides normal and offset by the gcd of
// the normal's entries); the zero normal is allowed and encodes a constant
// constraint.
struct AffineForm {
    ZVec normal;
    Rational offset;

    AffineForm(ZVec n, Rational off);
    Rational eval(const QVec& x) const;
    bool operator==(const AffineForm& o) const = default;
};

// Intersection of closed half-spaces.  Possibly empty ("infeasible"), which is
// a value, not an error.
struct HPolytope {
    int dim = 0;
    std::vector<AffineForm> forms;

    HPolytope(int d, std::vector<AffineForm> fs);
    bool contains(const QVec& x) const;
};

struct VRep {
    std::vector<QVec> vertices; // lex sorted, deduplicated
};

// gcd-reduction of a nonzero integer vector; errors on the zero vector.
ZVec primitive(const ZVec& v);

// Exact solution of the square/overdetermined system normal_i . x = rhs_i;
// nullopt when singular or inconsistent.
std::optional<QVec> solve_affine(const std::vector<std::pair<ZVec, Rational>>& eqs, int dim);

bool is_feasible(const HPolytope& p);

// Bounded iff empty or the recession cone is trivial (the facet normals
// positively span the ambient space).
bool is_bounded(const HPolytope& p);

bool is_full_dimensional(const HPolytope& p);

// Barycenter of the vertex set when the polytope is bounded and
// full-dimensional; nullopt when empty or lower-dimensional.
std::optional<QVec> interior_point(const HPolytope& p);

// All vertices by facet-subset solving; requires boundedness.
VRep vertex_enumeration(const HPolytope& p);

// Euclidean volume by star triangulation from the first (lex-min) vertex.
Rational volume(const HPolytope& p);

// Independent evaluation order: fan of cones over the barycenter.  Agrees
// exactly with volume(); kept as a cross-check.
Rational volume_from_interior(const HPolytope& p);

// Integer points, lex sorted; requires boundedness.
std::vector<ZVec> lattice_points(const HPolytope& p);

bool has_lattice_point(const HPolytope& p);

// Cardinality of the integer bounding box a lattice scan would visit.
Int scan_box_cardinality(const HPolytope& p);

// Scales offsets by lambda > 0 (so the polytope by lambda).
HPolytope dilate(const HPolytope& p, const Rational& lambda);

// Substitutes last coordinate = m; result lives in one dimension less.
HPolytope slice_last_coord(const HPolytope& p, const Int& m);

} // namespace fsig
