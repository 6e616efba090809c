#include "fsig/linalg.hpp"

#include <cassert>

namespace fsig {

namespace {

// Row echelon by exact Gauss elimination; returns pivot (row, col) pairs.
std::vector<std::pair<int, int>> echelon(QMat& m) {
    std::vector<std::pair<int, int>> pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        const Rational inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

} // namespace

int rank(QMat m) { return static_cast<int>(echelon(m).size()); }

Rational determinant(QMat m) {
    const int n = static_cast<int>(m.size());
    Rational det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != c) { std::swap(m[c], m[piv]); det = -det; }
        det *= m[c][c];
        const Rational inv = 1 / m[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            const Rational f = m[i][c] * inv;
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

std::optional<QVec> solve_any(const QMat& a, const QVec& b, std::vector<bool>* pivot_cols) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    QMat aug(rows);
    for (int i = 0; i < rows; ++i) {
        aug[i] = a[i];
        aug[i].push_back(b[i]);
    }
    auto pivots = echelon(aug);
    for (const auto& [r, c] : pivots)
        if (c == cols) return std::nullopt; // pivot in the rhs column: inconsistent
    QVec x(cols, Rational(0));
    if (pivot_cols) pivot_cols->assign(cols, false);
    for (const auto& [r, c] : pivots) {
        x[c] = aug[r][cols];
        if (pivot_cols) (*pivot_cols)[c] = true;
    }
    return x;
}

std::optional<QVec> solve_unique(const QMat& a, const QVec& b) {
    std::vector<bool> piv;
    auto x = solve_any(a, b, &piv);
    if (!x) return std::nullopt;
    for (bool p : piv)
        if (!p) return std::nullopt;
    return x;
}

std::optional<QVec> kernel_vector(const QMat& a, int cols) {
    QMat m = a;
    for (auto& row : m) row.resize(cols, Rational(0));
    auto pivots = echelon(m);
    std::vector<int> pivot_of_col(cols, -1);
    for (const auto& [r, c] : pivots) pivot_of_col[c] = r;
    int free_col = -1;
    for (int c = 0; c < cols; ++c)
        if (pivot_of_col[c] < 0) { free_col = c; break; }
    if (free_col < 0) return std::nullopt;
    QVec x(cols, Rational(0));
    x[free_col] = 1;
    for (const auto& [r, c] : pivots) x[c] = -m[r][free_col];
    return x;
}

int affine_dim(const std::vector<QVec>& pts) {
    if (pts.empty()) return -1;
    QMat diffs;
    for (size_t i = 1; i < pts.size(); ++i) {
        QVec d(pts[i].size());
        for (size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(d));
    }
    if (diffs.empty()) return 0;
    return rank(diffs);
}

ZVec primitive_direction(const QVec& v) {
    Int den = 1;
    for (const auto& q : v) den = lcm_z(den, Int(q.get_den()));
    ZVec w(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        w[i] = Int(v[i].get_num()) * (den / Int(v[i].get_den()));
        Int a = abs(w[i]);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    if (g == 0) throw input_error("primitive_direction: zero vector");
    for (auto& x : w) x /= g;
    return w;
}

} // namespace fsig
