#pragma once

#include "liemod/error.hpp"
#include "liemod/scalar.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <vector>

namespace liemod {

template <class T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using ScalarMatrix = Matrix<Scalar>;
using RationalVector = Vector<Rational>;

/// Rank by fraction-free (Bareiss) elimination after clearing row denominators.
std::size_t rank_exact(const RationalMatrix& m);
/// Same, for a matrix whose entries happen to be parameter-free.
/// Throws Error(ParametricEntry) otherwise.
std::size_t rank_exact(const ScalarMatrix& m);

/// Generic rank over Q(params): maximum rank over `trials` random integer points
/// from [2, 10^6], skipping points where a denominator or an `avoid` polynomial
/// vanishes.  Throws Error(NoValidSample) after 1000 rejected points per trial.
std::size_t rank_generic(const ScalarMatrix& m, std::uint64_t seed, int trials = 2,
                         const std::vector<Polynomial>& avoid = {});

/// Bareiss elimination over Z[params] (rows cleared of denominators first).
std::size_t rank_symbolic(const ScalarMatrix& m);

/// Entrywise poly_eval.
RationalMatrix evaluate(const ScalarMatrix& m, const Assignment& at);

/// Reduced row echelon form over a field.
template <class T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

template <class T>
Echelon<T> rref(Matrix<T> a) {
  Echelon<T> out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = row; i < a.rows(); ++i)
      if (!is_zero(a(i, col))) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    const T inv = T(1) / a(row, col);
    for (Eigen::Index j = col; j < a.cols(); ++j)
      if (!is_zero(a(row, j))) a(row, j) *= inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero(a(i, col))) continue;
      const T f = a(i, col);
      for (Eigen::Index j = col; j < a.cols(); ++j)
        if (!is_zero(a(row, j))) a(i, j) -= f * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

/// Basis of the right nullspace, one column per free variable (free entry = 1).
template <class T>
Matrix<T> nullspace(const Matrix<T>& a) {
  const Echelon<T> e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  Matrix<T> n = Matrix<T>::Zero(a.cols(), static_cast<Eigen::Index>(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) {
    n(free[f], f) = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (!is_zero(e.reduced(r, free[f]))) n(e.pivots[r], f) = -e.reduced(r, free[f]);
  }
  return n;
}

/// A solution of a x = b with free variables set to zero, or nullopt if inconsistent.
template <class T>
std::optional<Vector<T>> solve(const Matrix<T>& a, const Vector<T>& b) {
  Matrix<T> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const Echelon<T> e = rref(aug);
  Vector<T> x = Vector<T>::Zero(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x(e.pivots[r]) = e.reduced(r, a.cols());
  }
  return x;
}

/// Throws Error(SingularMatrix) when `a` is not invertible.
template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const Eigen::Index n = a.rows();
  Matrix<T> aug(n, 2 * n);
  aug << a, Matrix<T>::Identity(n, n);
  const Echelon<T> e = rref(aug);
  if (e.rank() < static_cast<std::size_t>(n) || (n > 0 && e.pivots[n - 1] >= n))
    throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
  return e.reduced.rightCols(n);
}

template <class T>
T determinant(Matrix<T> a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  T det(1);
  const Eigen::Index n = a.rows();
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (!is_zero(a(i, c))) { piv = i; break; }
    if (piv < 0) return T(0);
    if (piv != c) { a.row(piv).swap(a.row(c)); det = -det; }
    det *= a(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      const T f = a(i, c) / a(c, c);
      for (Eigen::Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

} // namespace liemod
