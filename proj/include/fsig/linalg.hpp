#pragma once

#include <optional>
#include <vector>

#include "fsig/rational.hpp"

namespace fsig {

using QMat = std::vector<QVec>;

int rank(QMat m);

Rational determinant(QMat m);

// Unique solution of A x = b, or nullopt when the system is inconsistent or
// underdetermined.  A may have more rows than columns.
std::optional<QVec> solve_unique(const QMat& a, const QVec& b);

// General solve: any particular solution of A x = b (free variables set to 0),
// or nullopt when inconsistent.  Reports which columns were pivots.
std::optional<QVec> solve_any(const QMat& a, const QVec& b, std::vector<bool>* pivot_cols = nullptr);

// A nonzero kernel vector of A, or nullopt when the kernel is trivial.
std::optional<QVec> kernel_vector(const QMat& a, int cols);

// Affine rank of a point set (dimension of its affine hull).
int affine_dim(const std::vector<QVec>& pts);

// gcd-reduced integer vector parallel to a rational one, numerators cleared.
ZVec primitive_direction(const QVec& v);

} // namespace fsig
