#include "fsig/rational.hpp"

#include <sstream>

namespace fsig {

namespace {

bool scan_digits(const std::string& s, size_t& i) {
    size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    return i > start;
}

} // namespace

Rational parse_rational(const std::string& s) {
    const auto bad = [&] { return input_error("malformed rational '" + s + "'"); };
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (!scan_digits(s, i)) throw bad();
    if (i == s.size()) return Rational(s, 10);
    if (s[i] == '.') {
        ++i;
        size_t fp_start = i;
        if (!scan_digits(s, i) || i != s.size()) throw bad();
        std::string ip = s.substr(0, fp_start - 1), fp = s.substr(fp_start);
        bool neg = ip[0] == '-';
        if (ip[0] == '+' || ip[0] == '-') ip = ip.substr(1);
        // base pinned: the GMP string constructors treat leading zeros as octal
        Rational q{Int(ip + fp, 10), pow_z(10, fp.size())};
        q.canonicalize();
        return neg ? Rational(-q) : q;
    }
    if (s[i] != '/') throw bad();
    ++i;
    if (!scan_digits(s, i) || i != s.size()) throw bad();
    Rational q(s, 10);
    if (q.get_den() == 0) throw bad();
    q.canonicalize();
    return q;
}

std::string to_decimal(const Rational& q, int digits) {
    const bool neg = q < 0;
    Rational a = abs_q(q);
    Int scale = pow_z(10, digits);
    // round half away from zero
    Int scaled;
    Int num = Int(a.get_num()) * scale * 2 + Int(a.get_den());
    mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), Int(Int(a.get_den()) * 2).get_mpz_t());
    Int ip = scaled / scale;
    Int fp = scaled % scale;
    std::string frac = fp.get_str();
    frac.insert(0, digits - frac.size(), '0');
    std::string out = ip.get_str() + "." + frac;
    return neg ? "-" + out : out;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool lex_less(const QVec& a, const QVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return a.size() < b.size();
}

std::string format_point(const QVec& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << to_string(p[i]);
    }
    os << ")";
    return os.str();
}

} // namespace fsig
