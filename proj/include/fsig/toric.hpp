#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fsig/polytope.hpp"

namespace fsig {

// Complete rational polyhedral fan given by its rays and maximal cones.
// Rays are primitive and distinct; every maximal cone is full-dimensional;
// completeness is certified by a deterministic 1000-direction sample at
// construction.
struct Fan {
    int dim = 0;
    std::vector<ZVec> rays;
    std::vector<std::vector<int>> max_cones;
    std::string name;

    static Fan make(int dim, std::vector<ZVec> rays, std::vector<std::vector<int>> max_cones,
                    std::string name = "");
};

// Torus-invariant divisor sum c_rho * D_rho, rational coefficients in ray order.
struct TDivisor {
    QVec coeffs;
};

TDivisor operator+(const TDivisor& a, const TDivisor& b);
TDivisor operator-(const TDivisor& a, const TDivisor& b);
TDivisor operator*(const Rational& k, const TDivisor& d);

bool cone_contains(const std::vector<ZVec>& rays, const QVec& x);

// { x : <x, v_rho> + c_rho >= 0 for every ray }.
HPolytope divisor_polytope(const Fan& fan, const TDivisor& d);

// Support-function criteria.  Each maximal cone must determine a (rational)
// vertex u_sigma of the support function; otherwise the divisor is rejected.
bool is_nef(const Fan& fan, const TDivisor& d);
bool is_ample(const Fan& fan, const TDivisor& d);
bool is_globally_generated(const Fan& fan, const TDivisor& d); // = nef on complete toric
bool is_big(const Fan& fan, const TDivisor& d);
bool is_effective(const TDivisor& d);
bool is_integral(const TDivisor& d);
bool is_zero(const TDivisor& d);

// Primitive integer facet forms (a, b) of the cone over P x {1}, one per
// irredundant facet a.x + b >= 0 of P, lex sorted.  The implied z >= 0 facet
// is not listed.  P must be bounded and full-dimensional.
std::vector<ZVec> cone_facet_normals(const HPolytope& p);

// dim! times the Euclidean volume of the divisor polytope.
Rational volume_of_divisor(const Fan& fan, const TDivisor& d);

TDivisor canonical_divisor(const Fan& fan); // all coefficients -1

// Basis of divisor classes for the rational divisor class group, with cached
// positivity flags per class.
struct NSBasis {
    std::vector<TDivisor> classes;
    std::vector<bool> ample;
    std::vector<bool> globally_generated;

    static NSBasis make(const Fan& fan, std::vector<TDivisor> classes);
};

int picard_rank(const Fan& fan);

// Coordinates of [D] in the given basis, modulo linear equivalence.
QVec class_coordinates(const Fan& fan, const TDivisor& d, const NSBasis& basis);

Rational norm_sup(const QVec& coords);

// ---- builtin catalog --------------------------------------------------------

struct Builtin {
    Fan fan;
    // class dictionary: maps rank-many coordinates to a divisor
    int class_rank = 1;
    std::vector<TDivisor> class_basis; // divisor = sum coords[i] * class_basis[i]
    std::string class_names;           // e.g. "aH-bE" or "(a,b)" or "m"
    std::vector<std::string> coord_names; // dictionary coordinates, e.g. {"a","b"}
    std::vector<std::string> symbols;     // named generators, e.g. {"H","E"}
    std::vector<TDivisor> generators;     // divisor of each symbol
};

std::vector<std::string> builtin_names();
const Builtin& builtin(const std::string& name);
TDivisor divisor_from_class(const Builtin& b, const QVec& coords);

// Self-describing fan record {name, dim, rays, max_cones} as JSON text.
Fan fan_from_json(const std::string& text);
std::string fan_to_json(const Fan& fan);
Fan load_variety(const std::string& name_or_path);

} // namespace fsig
