#pragma once

#include <string>
#include <vector>

#include "fsig/toric.hpp"

namespace fsig {

// A resolved variety: either a builtin (with its class dictionary) or a fan
// loaded from a JSON file (ray-coefficient input only).
struct VarietySpec {
    Fan fan;
    const Builtin* dict = nullptr;
};

VarietySpec resolve_variety(const std::string& name_or_path);

// Class dictionary form: "a,b" coordinates, a bare rational for rank one, or
// a symbolic combination of the named generators like "2H-1E" or "3H".
TDivisor parse_class_string(const Builtin& b, const std::string& s);

// Coefficient form: a comma-separated list, interpreted by length: one entry
// per ray gives torus-invariant coefficients, one entry per generator (builtin
// only) gives a raw combination of the named generators.
TDivisor parse_coeff_list(const VarietySpec& v, const std::string& s);

// Resolves the --divisor / --class pair; exactly one must be present.
TDivisor parse_divisor_option(const VarietySpec& v, const std::string& divisor_opt,
                              const std::string& class_opt);

// Single-string form: "rays:" prefixed comma list gives torus-invariant
// coefficients; otherwise class dictionary form (builtin) or ray coefficients
// (file-loaded fan).
TDivisor parse_spec(const VarietySpec& v, const std::string& s);

// Semicolon-separated divisor specs, each as in parse_divisor_option's class
// or coefficient form; an empty string means the builtin dictionary basis.
NSBasis parse_basis_option(const VarietySpec& v, const std::string& basis_opt);

// Column names for grid output: dictionary names when the dictionary basis is
// in play, else c1..ck.
std::vector<std::string> grid_coord_names(const VarietySpec& v, size_t k, bool dictionary);

// "lo:hi" with rational endpoints.
std::pair<Rational, Rational> parse_range(const std::string& s);

std::vector<std::string> split(const std::string& s, char sep);

} // namespace fsig
