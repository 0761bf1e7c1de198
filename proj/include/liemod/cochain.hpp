#pragma once

#include "liemod/matrix.hpp"
#include "liemod/scalar.hpp"

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace liemod {

/// psi^{i1..ik} -> o : e_{i1} ^ ... ^ e_{ik} |-> e_o.
/// Inputs are kept as a bitmask (bit i <=> e_{i+1}); output is 0-based.
struct BasisTerm {
  std::uint32_t inputs = 0;
  int output = 0;

  int degree() const { return std::popcount(inputs); }
  /// 1-based input indices, increasing.
  std::vector<int> indices() const;

  /// 1-based indices; throws Error(InvalidArgument) unless strictly increasing.
  static BasisTerm make(const std::vector<int>& inputs, int output);

  std::string to_string() const;  // "psi12->3", "psi->2" in degree 0

  friend bool operator==(const BasisTerm&, const BasisTerm&) = default;
};

/// Lexicographic on (sorted inputs, output); terms of lower degree first.
bool operator<(const BasisTerm& a, const BasisTerm& b);

/// The basis of C^k = Hom(Lambda^k V, V) in the fixed order.
std::vector<BasisTerm> cochain_basis(int n, int k);

/// Sparse element of Hom(Lambda^k V, V), V of dimension n <= 32.
template <class T>
class Cochain {
public:
  using TermMap = std::map<BasisTerm, T>;

  Cochain() = default;
  Cochain(int dim, int degree) : dim_(dim), degree_(degree) {}

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  T coeff(const BasisTerm& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? T(0) : it->second;
  }

  /// Adds c * b; throws Error(IndexOutOfRange) if b does not fit the space.
  void add(const BasisTerm& b, const T& c) {
    if (b.degree() != degree_ || b.output < 0 || b.output >= dim_ || (b.inputs >> dim_) != 0)
      throw Error(ErrorCode::IndexOutOfRange, b.to_string() + " does not lie in C^" +
                                                  std::to_string(degree_) + " of dim " +
                                                  std::to_string(dim_));
    add_unchecked(b, c);
  }
  void add_unchecked(const BasisTerm& b, const T& c) {
    if (is_zero_value(c)) return;
    auto [it, fresh] = terms_.try_emplace(b, c);
    if (!fresh) {
      it->second += c;
      if (is_zero_value(it->second)) terms_.erase(it);
    }
  }

  static Cochain identity(int n) {
    Cochain id(n, 1);
    for (int i = 0; i < n; ++i) id.add_unchecked({1u << i, i}, T(1));
    return id;
  }

  Cochain operator-() const {
    Cochain r = *this;
    for (auto& [b, c] : r.terms_) c = -c;
    return r;
  }
  Cochain& operator+=(const Cochain& o) {
    check_same(o);
    for (const auto& [b, c] : o.terms_) add_unchecked(b, c);
    return *this;
  }
  Cochain& operator-=(const Cochain& o) {
    check_same(o);
    for (const auto& [b, c] : o.terms_) add_unchecked(b, -c);
    return *this;
  }
  Cochain& operator*=(const T& s) {
    if (is_zero_value(s)) { terms_.clear(); return *this; }
    for (auto& [b, c] : terms_) c *= s;
    return *this;
  }
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const T& s, Cochain a) { return a *= s; }
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  template <class U, class F>
  Cochain<U> map(F f) const {
    Cochain<U> out(dim_, degree_);
    for (const auto& [b, c] : terms_) out.add_unchecked(b, f(c));
    return out;
  }

private:
  static bool is_zero_value(const T& c) { using liemod::is_zero; return is_zero(c); }
  void check_same(const Cochain& o) const {
    if (o.dim_ != dim_ || o.degree_ != degree_)
      throw Error(ErrorCode::DimensionMismatch, "cochains live in different spaces");
  }

  int dim_ = 0;
  int degree_ = 0;
  TermMap terms_;
};

using RationalCochain = Cochain<Rational>;
using ScalarCochain = Cochain<Scalar>;

namespace detail {

// Adds factor * (phi o-bar psi) into out.
template <class T>
void circ_into(Cochain<T>& out, const Cochain<T>& phi, const Cochain<T>& psi, int factor) {
  for (const auto& [bs, c1] : psi.terms()) {
    const std::uint32_t s = bs.inputs;
    const std::uint32_t m = 1u << bs.output;
    for (const auto& [bp, c2] : phi.terms()) {
      if (!(bp.inputs & m)) continue;
      const std::uint32_t r = bp.inputs & ~m;
      if (r & s) continue;
      // shuffle sign: pairs (x in S, y in R) with x > y; then moving psi's value into place
      int inv = std::popcount(r & (m - 1));
      for (std::uint32_t rest = r; rest; rest &= rest - 1) {
        const std::uint32_t low = rest & (~rest + 1);
        inv += std::popcount(s & ~((low << 1) - 1));
      }
      const int sign = (inv & 1) ? -factor : factor;
      T v = c1 * c2;
      if (sign < 0) v = -v;
      out.add_unchecked({s | r, bp.output}, v);
    }
  }
}

} // namespace detail

/// Graded Nijenhuis-Richardson bracket, degree p+q-1.  When that exceeds the
/// dimension the result is the zero cochain of that degree.
template <class T>
Cochain<T> nr_bracket(const Cochain<T>& phi, const Cochain<T>& psi) {
  if (phi.dim() != psi.dim())
    throw Error(ErrorCode::DimensionMismatch, "bracket of cochains on different spaces");
  const int p = phi.degree(), q = psi.degree();
  if (p + q - 1 < 0) throw Error(ErrorCode::InvalidArgument, "bracket of two degree-0 cochains");
  Cochain<T> out(phi.dim(), p + q - 1);
  if (p + q - 1 > phi.dim()) return out;
  detail::circ_into(out, phi, psi, 1);
  detail::circ_into(out, psi, phi, ((p - 1) * (q - 1)) % 2 == 0 ? -1 : 1);
  return out;
}

/// D(phi) = [d, phi]; on C^1 this is d(phi x, y) + d(x, phi y) - phi d(x, y).
template <class T>
Cochain<T> coboundary(const Cochain<T>& d, const Cochain<T>& phi) {
  return nr_bracket(d, phi);
}

template <class T>
bool jacobi_check(const Cochain<T>& d) {
  return nr_bracket(d, d).is_zero();
}

template <class T>
Vector<T> to_vector(const Cochain<T>& phi) {
  const auto basis = cochain_basis(phi.dim(), phi.degree());
  Vector<T> v = Vector<T>::Zero(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) v(i) = phi.coeff(basis[i]);
  return v;
}

template <class T>
Cochain<T> from_vector(int n, int k, const Vector<T>& v) {
  const auto basis = cochain_basis(n, k);
  if (static_cast<std::size_t>(v.size()) != basis.size())
    throw Error(ErrorCode::DimensionMismatch, "coordinate vector has the wrong length");
  Cochain<T> out(n, k);
  for (std::size_t i = 0; i < basis.size(); ++i) out.add_unchecked(basis[i], v(i));
  return out;
}

/// Matrix of D : C^k -> C^{k+1} in the fixed bases (rows: C^{k+1}).
template <class T>
Matrix<T> coboundary_matrix(const Cochain<T>& d, int k) {
  const int n = d.dim();
  const auto src = cochain_basis(n, k);
  const auto dst = cochain_basis(n, k + 1);
  std::map<BasisTerm, Eigen::Index> row;
  for (std::size_t i = 0; i < dst.size(); ++i) row[dst[i]] = static_cast<Eigen::Index>(i);
  Matrix<T> m = Matrix<T>::Zero(static_cast<Eigen::Index>(dst.size()),
                                static_cast<Eigen::Index>(src.size()));
  for (std::size_t j = 0; j < src.size(); ++j) {
    Cochain<T> e(n, k);
    e.add_unchecked(src[j], T(1));
    const Cochain<T> img = coboundary(d, e);
    for (const auto& [b, c] : img.terms()) m(row.at(b), j) = c;
  }
  return m;
}

/// Push-forward phi'(x1..xk) = G phi(G^-1 x1, ..., G^-1 xk).
/// Throws Error(SingularMatrix) if G is not invertible.
template <class T>
Cochain<T> transform(const Cochain<T>& phi, const Matrix<T>& g) {
  const int n = phi.dim();
  const int k = phi.degree();
  if (g.rows() != n || g.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "basis change has the wrong size");
  const Matrix<T> h = inverse(g);
  const auto sets = cochain_basis(n, k);  // every k-subset appears with output 0
  std::map<std::uint32_t, std::vector<int>> idx;
  for (const auto& b : sets)
    if (b.output == 0) {
      std::vector<int> v;
      for (int i : b.indices()) v.push_back(i - 1);
      idx[b.inputs] = v;
    }
  std::map<std::pair<std::uint32_t, std::uint32_t>, T> minors;
  auto minor = [&](std::uint32_t a, std::uint32_t i) -> const T& {
    auto key = std::make_pair(a, i);
    auto it = minors.find(key);
    if (it != minors.end()) return it->second;
    Matrix<T> sub(k, k);
    const auto& ra = idx[a];
    const auto& ci = idx[i];
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) sub(r, c) = h(ra[r], ci[c]);
    return minors.emplace(key, determinant(sub)).first->second;
  };
  Cochain<T> out(n, k);
  for (const auto& [b, c] : phi.terms())
    for (const auto& [i, unused] : idx) {
      (void)unused;
      const T& det = minor(b.inputs, i);
      if (is_zero(det)) continue;
      for (int o = 0; o < n; ++o)
        if (!is_zero(g(o, b.output))) out.add_unchecked({i, o}, g(o, b.output) * c * det);
    }
  return out;
}

RationalCochain evaluate(const ScalarCochain& phi, const Assignment& at);
ScalarCochain to_scalar(const RationalCochain& phi);

std::string to_string(const RationalCochain& phi);
std::string to_string(const ScalarCochain& phi);

/// phi(e_{i1}, ..., e_{ik}) for 0-based, not necessarily sorted, indices; returns coefficients per output.
template <class T>
Vector<T> apply(const Cochain<T>& phi, const std::vector<int>& args) {
  Vector<T> out = Vector<T>::Zero(phi.dim());
  std::uint32_t mask = 0;
  int inv = 0;
  for (std::size_t a = 0; a < args.size(); ++a) {
    if (mask >> args[a] & 1u) return out;
    mask |= 1u << args[a];
    for (std::size_t b = a + 1; b < args.size(); ++b) inv += args[a] > args[b];
  }
  for (const auto& [b, c] : phi.terms())
    if (b.inputs == mask) out(b.output) += (inv & 1) ? T(-c) : c;
  return out;
}

extern template class Cochain<Rational>;
extern template class Cochain<Scalar>;

} // namespace liemod
