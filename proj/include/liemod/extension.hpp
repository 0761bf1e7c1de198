#pragma once

#include "liemod/cochain.hpp"

#include <string>
#include <vector>

namespace liemod {

/// Extension of W by M.  All four pieces live on V = M + W, with M on indices
/// 0..m_dim-1 and W on m_dim..m_dim+w_dim-1.
///   mu:     M x M -> M      delta: W x W -> W
///   lambda: M x W -> M      psi:   W x W -> M
template <class T>
struct ExtensionData {
  int m_dim = 0;
  int w_dim = 0;
  Cochain<T> mu, delta, lambda, psi;

  ExtensionData() = default;
  ExtensionData(int m, int w)
      : m_dim(m), w_dim(w), mu(m + w, 2), delta(m + w, 2), lambda(m + w, 2), psi(m + w, 2) {}

  int dim() const { return m_dim + w_dim; }
};

using RationalExtension = ExtensionData<Rational>;
using ScalarExtension = ExtensionData<Scalar>;

namespace detail {

inline std::uint32_t low_mask(int m) { return (1u << m) - 1; }

template <class T>
void check_piece(const Cochain<T>& c, int m, int n, int m_inputs, bool out_in_m, const char* name) {
  if (c.dim() != n || c.degree() != 2)
    throw Error(ErrorCode::RangeViolation, std::string(name) + ": expected a 2-cochain on dim " + std::to_string(n));
  for (const auto& [b, v] : c.terms()) {
    const int in_m = std::popcount(b.inputs & low_mask(m));
    if (in_m != m_inputs || (b.output < m) != out_in_m)
      throw Error(ErrorCode::RangeViolation, std::string(name) + ": term " + b.to_string() + " outside its index range");
  }
}

} // namespace detail

/// Throws Error(RangeViolation) when a piece has a term outside its range.
template <class T>
void validate(const ExtensionData<T>& e) {
  const int n = e.dim();
  detail::check_piece(e.mu, e.m_dim, n, 2, true, "mu");
  detail::check_piece(e.delta, e.m_dim, n, 0, false, "delta");
  detail::check_piece(e.lambda, e.m_dim, n, 1, true, "lambda");
  detail::check_piece(e.psi, e.m_dim, n, 0, true, "psi");
}

/// [mu, lambda] = 0
template <class T>
bool check_compatibility(const ExtensionData<T>& e) {
  validate(e);
  return nr_bracket(e.mu, e.lambda).is_zero();
}

/// 1/2 [delta + lambda, delta + lambda] + [mu, psi] = 0
template <class T>
bool check_mc(const ExtensionData<T>& e) {
  validate(e);
  const Cochain<T> dl = e.delta + e.lambda;
  Cochain<T> lhs = nr_bracket(dl, dl);
  lhs *= T(Rational(1, 2));
  lhs += nr_bracket(e.mu, e.psi);
  return lhs.is_zero();
}

/// [delta + lambda, psi] = 0
template <class T>
bool check_cocycle(const ExtensionData<T>& e) {
  validate(e);
  return nr_bracket(e.delta + e.lambda, e.psi).is_zero();
}

/// d = delta + mu + lambda + psi.  Throws Error(ConditionFailed) naming the
/// first condition that fails (mu and delta are required to be Lie structures too).
template <class T>
Cochain<T> assemble_extension(const ExtensionData<T>& e) {
  validate(e);
  if (!jacobi_check(e.mu)) throw Error(ErrorCode::ConditionFailed, "mu is not a Lie structure");
  if (!jacobi_check(e.delta)) throw Error(ErrorCode::ConditionFailed, "delta is not a Lie structure");
  if (!check_compatibility(e)) throw Error(ErrorCode::ConditionFailed, "compatibility condition [mu,lambda]=0 fails");
  if (!check_mc(e)) throw Error(ErrorCode::ConditionFailed, "Maurer-Cartan condition fails");
  if (!check_cocycle(e)) throw Error(ErrorCode::ConditionFailed, "cocycle condition [delta+lambda,psi]=0 fails");
  return e.delta + e.mu + e.lambda + e.psi;
}

/// Sorts the terms of d into the four pieces.  Throws Error(RangeViolation)
/// when some term fits none of them (M is not an ideal).
template <class T>
ExtensionData<T> split_extension(const Cochain<T>& d, int m_dim) {
  if (m_dim < 0 || m_dim > d.dim()) throw Error(ErrorCode::RangeViolation, "m_dim out of range");
  ExtensionData<T> e(m_dim, d.dim() - m_dim);
  for (const auto& [b, c] : d.terms()) {
    const int in_m = std::popcount(b.inputs & detail::low_mask(m_dim));
    const bool out_m = b.output < m_dim;
    if (in_m == 2 && out_m) e.mu.add_unchecked(b, c);
    else if (in_m == 1 && out_m) e.lambda.add_unchecked(b, c);
    else if (in_m == 0) (out_m ? e.psi : e.delta).add_unchecked(b, c);
    else throw Error(ErrorCode::RangeViolation, "term " + b.to_string() + " leaves M");
  }
  return e;
}

/// lambda = sum_k sum_ij mats[k](i,j) psi^{j, m+k}_i: matrix k is the action of
/// the k-th basis vector of W on M.  Dimension m + mats.size().
template <class T>
Cochain<T> module_structure(int m_dim, const std::vector<Matrix<T>>& mats) {
  const int n = m_dim + static_cast<int>(mats.size());
  Cochain<T> out(n, 2);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    const auto& a = mats[k];
    if (a.rows() != m_dim || a.cols() != m_dim)
      throw Error(ErrorCode::DimensionMismatch, "module matrix must be m x m");
    const int w = m_dim + static_cast<int>(k);
    for (int i = 0; i < m_dim; ++i)
      for (int j = 0; j < m_dim; ++j)
        if (!is_zero(a(i, j))) out.add_unchecked({(1u << j) | (1u << w), i}, a(i, j));
  }
  return out;
}

/// psi = sum_i c_i psi^{m+1, m+2}_i for a 2-dimensional W.
template <class T>
Cochain<T> cocycle_from_vector(const Vector<T>& c) {
  const int m = static_cast<int>(c.size());
  Cochain<T> out(m + 2, 2);
  for (int i = 0; i < m; ++i)
    if (!is_zero(c(i))) out.add_unchecked({(1u << m) | (1u << (m + 1)), i}, c(i));
  return out;
}

/// Trivial-by-trivial extension: d = sum a^i_j psi^{j,n+1}_i.
template <class T>
Cochain<T> algebra_from_matrix(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix must be square");
  return module_structure(static_cast<int>(a.rows()), std::vector<Matrix<T>>{a});
}

// ---- family symmetries

using ProjectivePoint = std::vector<Rational>;

enum class SymmetryMap { Sigma, Tau };
SymmetryMap parse_symmetry_map(std::string_view name);

/// Families with a sigma/tau action: "d5" (3 coordinates) and "d6" (2 coordinates).
/// Throws Error(UnknownId), Error(DimensionMismatch) or Error(UndefinedAtPoint).
ProjectivePoint symmetry_map(std::string_view family, SymmetryMap which, const ProjectivePoint& point);

/// u ~ v iff every 2x2 minor u_i v_j - u_j v_i vanishes (and neither is all zero).
bool projective_equal(const ProjectivePoint& u, const ProjectivePoint& v);

std::string to_string(const ProjectivePoint& p);
ProjectivePoint parse_projective(std::string_view text);

} // namespace liemod
