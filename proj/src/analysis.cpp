#include "fsig/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "fsig/errors.hpp"
#include "fsig/parallel.hpp"

namespace fsig {

bool CheckReport::passed() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

Check make_check(std::string name, const Rational& lhs, const Rational& rhs, bool pass,
                 std::string witness) {
    Check c;
    c.name = std::move(name);
    c.pass = pass;
    c.lhs = to_string(lhs);
    c.rhs = to_string(rhs);
    c.witness = std::move(witness);
    return c;
}

Check equal_check(std::string name, const Rational& lhs, const Rational& rhs, std::string witness) {
    return make_check(std::move(name), lhs, rhs, lhs == rhs, std::move(witness));
}

Check le_check(std::string name, const Rational& lhs, const Rational& rhs, std::string witness) {
    return make_check(std::move(name), lhs, rhs, lhs <= rhs, std::move(witness));
}

Rational factorial(int n) {
    Rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// evaluate every applicable piece, insist they agree, return the first
Rational pieces_agree(const std::vector<std::pair<bool, Rational>>& pieces, const char* where) {
    std::optional<Rational> first;
    for (const auto& [applies, value] : pieces) {
        if (!applies) continue;
        if (!first)
            first = value;
        else if (*first != value)
            throw std::logic_error(std::string(where) + ": adjacent pieces disagree on the boundary");
    }
    if (!first) throw std::logic_error(std::string(where) + ": no applicable piece");
    return *first;
}

} // namespace

Rational closed_form_p1p1(const Rational& a0, const Rational& b0) {
    if (a0 <= 0 || b0 <= 0) throw precondition_error("closed_form_p1p1 requires a, b > 0");
    const Rational a = std::min(a0, b0), b = std::max(a0, b0); // symmetric
    std::vector<std::pair<bool, Rational>> pieces;
    pieces.emplace_back(2 * a <= b, 2 * a <= b ? Rational(a / (b * b)) : Rational(0));
    if (b <= 2 * a) {
        const Rational t = b - 2 * a;
        pieces.emplace_back(true, (t * t * t + 3 * a * a * a) / (3 * a * a * b * b));
    } else {
        pieces.emplace_back(false, Rational(0));
    }
    return pieces_agree(pieces, "closed_form_p1p1");
}

Rational closed_form_blp2(const Rational& a, const Rational& b) {
    if (!(0 < b && b < a)) throw precondition_error("closed_form_blp2 requires 0 < b < a");
    const Rational d = a - b;
    std::vector<std::pair<bool, Rational>> pieces;

    const bool in1 = a <= Rational(3, 2) * b;
    pieces.emplace_back(in1, in1 ? Rational(d / (a * b)) : Rational(0));

    const bool in2 = Rational(3, 2) * b <= a && a <= 2 * b;
    if (in2) {
        const Rational t2 = (2 * b - a) / (2 * a * d) +
                            (3 * b - a) * (2 * a - 3 * b) / (6 * b * d * d) +
                            (2 * a - 3 * b) * (2 * a - 3 * b) / (2 * a * d * d);
        pieces.emplace_back(true, t2);
    } else {
        pieces.emplace_back(false, Rational(0));
    }

    const bool in3 = 2 * b <= a && a <= 3 * b;
    if (in3) {
        const Rational c = a - 2 * b;
        pieces.emplace_back(true, 1 / a - (b * b * b + c * c * c) / (6 * a * b * d * d));
    } else {
        pieces.emplace_back(false, Rational(0));
    }

    const bool in4 = a >= 3 * b;
    if (in4) {
        const Rational c = a - 2 * b, f = a - 3 * b;
        pieces.emplace_back(true, 1 / a - (b * b + c * c + f * c + f * f) / (6 * a * d * d));
    } else {
        pieces.emplace_back(false, Rational(0));
    }
    return pieces_agree(pieces, "closed_form_blp2");
}

CheckReport compare_closed_forms(const std::string& variety,
                                 const std::vector<std::pair<Rational, Rational>>& points) {
    const Builtin& b = builtin(variety);
    const bool blp2 = variety == "bl_p2";
    if (!blp2 && variety != "p1xp1")
        throw input_error("closed forms available for p1xp1 and bl_p2 only");
    CheckReport rep;
    rep.suite = "compare_closed_forms(" + variety + ")";
    auto rows = parallel_map<Check>(points.size(), [&](size_t i) {
        const auto& [x, y] = points[i];
        Rational expect = blp2 ? closed_form_blp2(x, y) : closed_form_p1p1(x, y);
        Rational got = fsignature(b.fan, divisor_from_class(b, {x, y}));
        std::ostringstream w;
        w << variety << " (" << to_string(x) << "," << to_string(y) << ")";
        return equal_check("volume matches closed form", got, expect, w.str());
    });
    rep.checks = std::move(rows);
    return rep;
}

CheckReport scaling_check(const Fan& fan, const TDivisor& d, const std::vector<Rational>& factors,
                          const std::string& witness) {
    CheckReport rep;
    rep.suite = "scaling_check";
    const Rational s = fsignature(fan, d);
    for (const auto& k : factors) {
        if (k <= 0) throw input_error("scaling factors must be positive");
        Rational scaled = k * fsignature(fan, k * d);
        rep.checks.push_back(equal_check("lambda * s(lambda D) == s(D)", scaled, s,
                                         witness + " lambda=" + to_string(k)));
    }
    return rep;
}

// ---- grids ------------------------------------------------------------------

std::vector<QVec> grid_points(const GridSpec& spec) {
    if (spec.step <= 0) throw input_error("grid step must be positive");
    if (spec.ranges.size() != spec.basis.classes.size())
        throw input_error("grid needs one range per basis coordinate");
    std::vector<std::vector<Rational>> axes;
    for (const auto& [lo, hi] : spec.ranges) {
        // lo > hi is an empty axis, so the whole grid is empty
        std::vector<Rational> axis;
        for (Rational x = lo; x <= hi; x += spec.step) axis.push_back(x);
        axes.push_back(std::move(axis));
    }
    std::vector<QVec> pts;
    QVec cur(axes.size());
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == axes.size()) {
            pts.push_back(cur);
            return;
        }
        for (const auto& x : axes[i]) {
            cur[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return pts;
}

namespace {

TDivisor combine(const NSBasis& basis, const QVec& coords) {
    TDivisor d;
    d.coeffs.assign(basis.classes[0].coeffs.size(), Rational(0));
    for (size_t i = 0; i < coords.size(); ++i) d = d + (coords[i] * basis.classes[i]);
    return d;
}

} // namespace

Int empirical_c1(const Fan& fan, const NSBasis& basis, const std::vector<TDivisor>& divisors) {
    Rational worst = 0;
    for (const auto& d : divisors) {
        const Rational norm = norm_sup(class_coordinates(fan, d, basis));
        for (const Int& p : {Int(2), Int(3)})
            for (int e = 1; e <= 3; ++e) {
                const long msd = max_splitting_degree(fan, d, p, e);
                worst = std::max(worst, Rational(norm * Rational(msd) / Rational(pow_z(p, e))));
            }
    }
    return ceil_q(worst);
}

LipschitzProfile lipschitz_profile(const Fan& fan, const NSBasis& basis, const TDivisor& center,
                                   const Rational& radius, const Rational& h) {
    if (radius < 0 || h <= 0) throw input_error("lipschitz_profile needs radius >= 0 and h > 0");
    const QVec c0 = class_coordinates(fan, center, basis);
    const int k = static_cast<int>(c0.size());

    auto profile_at = [&](const Rational& step) {
        long reach = 0;
        while (Rational(reach + 1) * step < radius) ++reach;
        std::vector<long> idx(k, -reach);
        std::vector<QVec> pts;
        while (true) {
            QVec p(k);
            for (int j = 0; j < k; ++j) p[j] = c0[j] + Rational(idx[j]) * step;
            pts.push_back(std::move(p));
            int j = k - 1;
            while (j >= 0 && idx[j] == reach) { idx[j] = -reach; --j; }
            if (j < 0) break;
            ++idx[j];
        }
        std::string offenders;
        for (const auto& p : pts)
            if (!is_ample(fan, combine(basis, p)))
                offenders += (offenders.empty() ? "" : ", ") + format_point(p);
        if (!offenders.empty())
            throw precondition_error("lipschitz_profile ball leaves the ample cone at " + offenders);

        struct SV { Rational s, vol; };
        auto vals = parallel_map<SV>(pts.size(), [&](size_t i) {
            TDivisor d = combine(basis, pts[i]);
            return SV{fsignature(fan, d), volume_of_divisor(fan, d)};
        });
        // adjacent pairs differ by `step` in exactly one coordinate
        const long side = 2 * reach + 1;
        auto flat = [&](const std::vector<long>& ix) {
            long f = 0;
            for (int j = 0; j < k; ++j) f = f * side + (ix[j] + reach);
            return static_cast<size_t>(f);
        };
        Rational qs = 0, qv = 0;
        std::vector<long> ix(k, -reach);
        while (true) {
            for (int j = 0; j < k; ++j) {
                if (ix[j] == reach) continue;
                auto jx = ix;
                ++jx[j];
                const auto &a = vals[flat(ix)], &b = vals[flat(jx)];
                qs = std::max(qs, Rational(abs_q(a.s - b.s) / step));
                qv = std::max(qv, Rational(abs_q(a.vol - b.vol) / step));
            }
            int j = k - 1;
            while (j >= 0 && ix[j] == reach) { ix[j] = -reach; --j; }
            if (j < 0) break;
            ++ix[j];
        }
        return std::pair<Rational, Rational>(qs, qv);
    };

    LipschitzProfile prof;
    auto [qs1, qv1] = profile_at(h);
    auto [qs2, qv2] = profile_at(h / 2);
    prof.max_quotient_h = qs1;
    prof.vol_quotient_h = qv1;
    prof.max_quotient_h2 = qs2;
    prof.vol_quotient_h2 = qv2;
    return prof;
}

CheckReport local_upper_bound_check(const Fan& fan, const GridSpec& spec) {
    for (size_t i = 0; i < spec.basis.classes.size(); ++i)
        if (!spec.basis.ample[i] || !spec.basis.globally_generated[i])
            throw precondition_error("local_upper_bound_check needs an ample globally generated basis");
    auto pts = grid_points(spec);
    std::string offenders;
    for (const auto& p : pts) {
        bool nonneg = true;
        for (const auto& x : p)
            if (x < 0) nonneg = false;
        if (!nonneg || floor_q(norm_sup(p)) < 1)
            offenders += (offenders.empty() ? "" : ", ") + format_point(p);
    }
    if (!offenders.empty())
        throw precondition_error("grid points must lie in the cone with floor(norm) >= 1; offending: " +
                                 offenders);

    const int d = fan.dim;
    const Rational big = pow_q(Rational(d * d + 2 * d), d + 1);
    const Rational fac = factorial(d + 1);

    CheckReport rep;
    rep.suite = "local_upper_bound_check";
    struct Row { Rational s, vol, norm; };
    auto rows = parallel_map<Row>(pts.size(), [&](size_t i) {
        TDivisor l = combine(spec.basis, pts[i]);
        return Row{fsignature(fan, l), volume_of_divisor(fan, l), norm_sup(pts[i])};
    });
    std::vector<TDivisor> divisors;
    for (const auto& p : pts) divisors.push_back(combine(spec.basis, p));
    const Int c1 = empirical_c1(fan, spec.basis, divisors);
    rep.notes.emplace_back("empirical_C1", c1.get_str());

    for (size_t i = 0; i < pts.size(); ++i) {
        const auto& r = rows[i];
        const std::string w = format_point(pts[i]);
        const Rational rhs = big * r.vol / (pow_q(Rational(floor_q(r.norm)), d + 1) * fac);
        rep.checks.push_back(le_check("s <= (d^2+2d)^(d+1) vol / (floor(norm)^(d+1) (d+1)!)",
                                      r.s, rhs, w));
        const Rational rhs_c1 = pow_q(Rational(c1), d + 1) * r.vol / (pow_q(r.norm, d + 1) * fac);
        rep.checks.push_back(le_check("s <= C1^(d+1) vol / (norm^(d+1) (d+1)!)", r.s, rhs_c1, w));
    }
    return rep;
}

Rational boundary_limit(const Fan& fan, const TDivisor& d0, const TDivisor& a, int schedule) {
    if (is_zero(d0)) throw precondition_error("extension defined on non-zero classes");
    if (!is_nef(fan, d0)) throw precondition_error("boundary_limit requires a nef target class");
    if (schedule < 2) throw input_error("boundary_limit schedule must be >= 2");
    Rational prev = 0, last = 0;
    for (int k = 1; k <= schedule; ++k) {
        const Rational lambda(Int(1), pow_z(2, k));
        TDivisor dk = d0 + (lambda * a);
        if (!is_ample(fan, dk))
            throw precondition_error("boundary_limit path leaves the ample cone at lambda = " +
                                     to_string(lambda));
        prev = last;
        last = fsignature(fan, dk);
    }
    return 2 * last - prev; // linear extrapolation of the two finest samples
}

CheckReport key_inequality_check(const Fan& fan, const NSBasis& basis, const TDivisor& l,
                                 const TDivisor& h, long n, long b, const std::string& witness) {
    if (!is_integral(l) || !is_ample(fan, l))
        throw precondition_error("key inequality hypothesis failed: L must be integral ample");
    if (!is_integral(h) || !is_effective(h))
        throw precondition_error("key inequality hypothesis failed: H must be integral effective");
    if (n < 1 || b < 1) throw input_error("key_inequality_check needs n, b >= 1");
    const Rational norm_l = norm_sup(class_coordinates(fan, l, basis));
    const Rational norm_h = norm_sup(class_coordinates(fan, h, basis));
    if (!(Rational(n) > 2 * norm_h / norm_l))
        throw precondition_error("key inequality hypothesis failed: n > 2||H||/||L|| required");
    TDivisor nl_bh = (Rational(n) * l) - (Rational(b) * h);
    if (!is_big(fan, nl_bh))
        throw precondition_error("key inequality hypothesis failed: nL - bH must be big");

    TDivisor perturbed = l + (Rational(Int(1), Int(n)) * h);
    const Rational s_l = fsignature(fan, l);
    const Rational s_pert = fsignature(fan, perturbed);
    const Rational vol_l = volume_of_divisor(fan, l);
    const Rational vol_pert = volume_of_divisor(fan, perturbed);

    TDivisor nl_h = (Rational(n) * l) + h;
    const Int c1 = empirical_c1(fan, basis, {l, nl_h});

    const int d = fan.dim;
    const Rational bb(b);
    const Rational shell = (pow_q(bb + 1, d) - pow_q(bb, d)) / pow_q(bb, d);
    const Rational lead = pow_q(Rational(c1), d + 1) / (pow_q(norm_l, d + 1) * factorial(d + 1));
    const Rational rhs = lead * (2 * vol_l * shell + (vol_pert - vol_l)) + 2 * s_l / (bb + 1);
    const Rational lhs = abs_q(s_l - s_pert);

    CheckReport rep;
    rep.suite = "key_inequality_check";
    rep.notes.emplace_back("empirical_C1", c1.get_str());
    rep.checks.push_back(le_check("|s(L) - s(L + H/n)| <= effective Lipschitz bound", lhs, rhs,
                                  witness + " n=" + std::to_string(n) + " b=" + std::to_string(b)));
    return rep;
}

RatioReport ratio_report(const Fan& fan, const GridSpec& spec) {
    auto pts = grid_points(spec);
    if (pts.empty()) throw input_error("empty ratio grid");
    std::string offenders;
    for (const auto& p : pts)
        if (!is_ample(fan, combine(spec.basis, p)))
            offenders += (offenders.empty() ? "" : ", ") + format_point(p);
    if (!offenders.empty())
        throw precondition_error("ratio grid must lie in the ample cone; offending: " + offenders);

    auto ratios = parallel_map<Rational>(pts.size(), [&](size_t i) -> Rational {
        TDivisor d = combine(spec.basis, pts[i]);
        const Rational s = fsignature(fan, d);
        const Rational vol = volume_of_divisor(fan, d);
        return s * pow_q(norm_sup(pts[i]), fan.dim + 1) / vol;
    });
    RatioReport rep;
    rep.min_ratio = ratios[0];
    rep.argmin = pts[0];
    for (size_t i = 1; i < ratios.size(); ++i)
        if (ratios[i] < rep.min_ratio) {
            rep.min_ratio = ratios[i];
            rep.argmin = pts[i];
        }
    return rep;
}

std::vector<GridRow> evaluate_grid(const Fan& fan, const GridSpec& spec, int boundary_schedule) {
    auto pts = grid_points(spec);

    // an ample direction used for boundary extrapolation rows
    std::optional<TDivisor> interior;
    for (long a = 1; a <= 4 && !interior; ++a)
        for (long bb = 1; bb <= 4 && !interior; ++bb) {
            QVec c;
            c.push_back(Rational(a));
            for (size_t j = 1; j < spec.basis.classes.size(); ++j) c.push_back(Rational(bb));
            TDivisor d = combine(spec.basis, c);
            if (is_ample(fan, d)) interior = d;
        }

    return parallel_map<GridRow>(pts.size(), [&](size_t i) {
        GridRow row;
        row.coords = pts[i];
        row.norm = norm_sup(pts[i]);
        TDivisor d = combine(spec.basis, pts[i]);
        if (is_zero(d)) {
            row.flag = "nef-not-big";
            return row;
        }
        if (!is_nef(fan, d))
            throw precondition_error("grid point outside the nef cone: " + format_point(pts[i]));
        if (is_ample(fan, d)) {
            row.flag = "ample";
            row.s = fsignature(fan, d);
        } else if (!is_big(fan, d)) {
            row.flag = "nef-not-big";
            row.s = 0;
        } else {
            row.flag = "nef-big-limit";
            if (!interior) throw precondition_error("no ample direction available for boundary rows");
            row.s = boundary_limit(fan, d, *interior, boundary_schedule);
        }
        row.vol = volume_of_divisor(fan, d);
        if (floor_q(row.norm) >= 1) {
            const int dd = fan.dim;
            row.bound = pow_q(Rational(dd * dd + 2 * dd), dd + 1) * row.vol /
                        (pow_q(Rational(floor_q(row.norm)), dd + 1) * factorial(dd + 1));
        }
        if (row.vol > 0) row.ratio = row.s * pow_q(row.norm, fan.dim + 1) / row.vol;
        return row;
    });
}

} // namespace fsig
