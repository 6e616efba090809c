#include "fsig/input.hpp"

#include <cctype>

#include "fsig/errors.hpp"

namespace fsig {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

VarietySpec resolve_variety(const std::string& name_or_path) {
    VarietySpec v;
    for (const auto& name : builtin_names())
        if (name == name_or_path) {
            v.dict = &builtin(name);
            v.fan = v.dict->fan;
            return v;
        }
    v.fan = load_variety(name_or_path);
    return v;
}

namespace {

bool has_alpha(const std::string& s) {
    for (char c : s)
        if (std::isalpha(static_cast<unsigned char>(c))) return true;
    return false;
}

QVec parse_rational_list(const std::string& s) {
    QVec out;
    for (const auto& part : split(s, ',')) out.push_back(parse_rational(part));
    return out;
}

// "2H-1E" | "3H" | "H-E": signed terms, coefficient defaults to 1.
TDivisor parse_symbolic(const Builtin& b, const std::string& s) {
    TDivisor d;
    d.coeffs.assign(b.fan.rays.size(), Rational(0));
    size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        Rational sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        } else if (any) {
            throw input_error("malformed class '" + s + "': expected + or - between terms");
        }
        std::string num;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/' ||
                                s[i] == '.'))
            num.push_back(s[i++]);
        std::string sym;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i]))) &&
               !(!sym.empty() && std::isalpha(static_cast<unsigned char>(s[i])) &&
                 std::isdigit(static_cast<unsigned char>(sym.back()))))
            sym.push_back(s[i++]);
        if (sym.empty())
            throw input_error("malformed class '" + s + "': missing generator name");
        size_t g = 0;
        while (g < b.symbols.size() && b.symbols[g] != sym) ++g;
        if (g == b.symbols.size())
            throw input_error("unknown generator '" + sym + "' in class '" + s + "'");
        Rational k = num.empty() ? Rational(1) : parse_rational(num);
        d = d + (sign * k) * b.generators[g];
        any = true;
    }
    if (!any) throw input_error("empty class expression");
    return d;
}

} // namespace

TDivisor parse_class_string(const Builtin& b, const std::string& s) {
    if (s.empty()) throw input_error("empty class expression");
    if (has_alpha(s)) return parse_symbolic(b, s);
    QVec coords = parse_rational_list(s);
    if (static_cast<int>(coords.size()) != b.class_rank)
        throw input_error("class for " + b.fan.name + " takes " +
                          std::to_string(b.class_rank) + " coordinate(s), got " +
                          std::to_string(coords.size()));
    return divisor_from_class(b, coords);
}

TDivisor parse_coeff_list(const VarietySpec& v, const std::string& s) {
    QVec coeffs = parse_rational_list(s);
    if (coeffs.size() == v.fan.rays.size()) {
        TDivisor d;
        d.coeffs = std::move(coeffs);
        return d;
    }
    if (v.dict && coeffs.size() == v.dict->generators.size()) {
        TDivisor d;
        d.coeffs.assign(v.fan.rays.size(), Rational(0));
        for (size_t i = 0; i < coeffs.size(); ++i) d = d + coeffs[i] * v.dict->generators[i];
        return d;
    }
    std::string expect = std::to_string(v.fan.rays.size()) + " ray coefficients";
    if (v.dict && v.dict->generators.size() != v.fan.rays.size())
        expect += " or " + std::to_string(v.dict->generators.size()) + " generator coefficients";
    throw input_error("divisor for " + v.fan.name + " takes " + expect + ", got " +
                      std::to_string(coeffs.size()));
}

TDivisor parse_divisor_option(const VarietySpec& v, const std::string& divisor_opt,
                              const std::string& class_opt) {
    if (divisor_opt.empty() == class_opt.empty())
        throw input_error("give exactly one of --divisor and --class");
    if (!class_opt.empty()) {
        if (!v.dict)
            throw input_error("--class needs a builtin variety with a class dictionary; use "
                              "--divisor with ray coefficients");
        return parse_class_string(*v.dict, class_opt);
    }
    return parse_coeff_list(v, divisor_opt);
}

TDivisor parse_spec(const VarietySpec& v, const std::string& s) {
    if (s.rfind("rays:", 0) == 0) {
        QVec coeffs = parse_rational_list(s.substr(5));
        if (coeffs.size() != v.fan.rays.size())
            throw input_error("rays: spec for " + v.fan.name + " takes " +
                              std::to_string(v.fan.rays.size()) + " coefficients, got " +
                              std::to_string(coeffs.size()));
        TDivisor d;
        d.coeffs = std::move(coeffs);
        return d;
    }
    if (v.dict) return parse_class_string(*v.dict, s);
    return parse_coeff_list(v, s);
}

NSBasis parse_basis_option(const VarietySpec& v, const std::string& basis_opt) {
    std::vector<TDivisor> classes;
    if (basis_opt.empty()) {
        if (!v.dict)
            throw input_error("--basis is required for varieties without a class dictionary");
        classes = v.dict->class_basis;
    } else {
        for (const auto& part : split(basis_opt, ';')) {
            if (v.dict && has_alpha(part))
                classes.push_back(parse_class_string(*v.dict, part));
            else
                classes.push_back(parse_coeff_list(v, part));
        }
    }
    return NSBasis::make(v.fan, std::move(classes));
}

std::vector<std::string> grid_coord_names(const VarietySpec& v, size_t k, bool dictionary) {
    if (dictionary && v.dict && v.dict->coord_names.size() == k) return v.dict->coord_names;
    std::vector<std::string> names;
    for (size_t i = 1; i <= k; ++i) names.push_back("c" + std::to_string(i));
    return names;
}

std::pair<Rational, Rational> parse_range(const std::string& s) {
    auto parts = split(s, ':');
    if (parts.size() != 2) throw input_error("range must look like lo:hi, got '" + s + "'");
    return {parse_rational(parts[0]), parse_rational(parts[1])};
}

} // namespace fsig
