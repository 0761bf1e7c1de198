#pragma once
// Independent reference implementations used as test oracles.  They work from
// definitions (multilinear evaluation, shuffle sums, naive elimination) and
// share nothing with the library beyond the Cochain container itself.

#include "liemod/cochain.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace oracle {

using liemod::BasisTerm;
using liemod::Cochain;
using liemod::Matrix;
using liemod::Rational;

// Plain Gaussian elimination over Q with first-nonzero pivoting.
inline std::size_t naive_rank(Matrix<Rational> a) {
  std::size_t rank = 0;
  const auto rows = a.rows(), cols = a.cols();
  for (Eigen::Index c = 0; c < cols && static_cast<Eigen::Index>(rank) < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (a(r, c) != 0) { piv = r; break; }
    if (piv < 0) continue;
    a.row(piv).swap(a.row(rank));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (a(r, c) == 0) continue;
      const Rational f = a(r, c) / a(rank, c);
      for (Eigen::Index j = c; j < cols; ++j) a(r, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

inline Matrix<Rational> naive_inverse(Matrix<Rational> a) {
  const auto n = a.rows();
  Matrix<Rational> inv = Matrix<Rational>::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (a(piv, c) == 0) ++piv;
    a.row(piv).swap(a.row(c));
    inv.row(piv).swap(inv.row(c));
    const Rational s = a(c, c);
    a.row(c) /= s;
    inv.row(c) /= s;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      a.row(r) -= f * a.row(c);
      inv.row(r) -= f * inv.row(c);
    }
  }
  return inv;
}

// phi(e_{idx[0]}, ..., e_{idx[k-1]}) component `out`, 0-based, any order.
template <class T>
T eval(const Cochain<T>& phi, std::vector<int> idx, int out) {
  int swaps = 0;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
      if (idx[j] > idx[j + 1]) { std::swap(idx[j], idx[j + 1]); ++swaps; }
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i && idx[i] == idx[i - 1]) return T(0);
    mask |= 1u << idx[i];
  }
  T c = phi.coeff(BasisTerm{mask, out});
  return swaps % 2 ? T(-c) : c;
}

inline int perm_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv % 2 ? -1 : 1;
}

// (phi o psi)(x) on a basis tuple by the shuffle sum.
template <class T>
T circ(const Cochain<T>& phi, const Cochain<T>& psi, const std::vector<int>& x, int out) {
  const int q = psi.degree();
  const int m = static_cast<int>(x.size());
  T total(0);
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    if (std::popcount(s) != q) continue;
    std::vector<int> perm, in_psi, rest;
    for (int i = 0; i < m; ++i)
      if (s >> i & 1u) { perm.push_back(i); in_psi.push_back(x[i]); }
    for (int i = 0; i < m; ++i)
      if (!(s >> i & 1u)) { perm.push_back(i); rest.push_back(x[i]); }
    const int sign = perm_sign(perm);
    for (int o = 0; o < phi.dim(); ++o) {
      const T a = eval(psi, in_psi, o);
      if (liemod::is_zero(a)) continue;
      std::vector<int> args{o};
      args.insert(args.end(), rest.begin(), rest.end());
      const T b = eval(phi, args, out);
      if (liemod::is_zero(b)) continue;
      total += sign > 0 ? T(a * b) : T(-(a * b));
    }
  }
  return total;
}

template <class T>
Cochain<T> bracket(const Cochain<T>& phi, const Cochain<T>& psi) {
  const int n = phi.dim(), p = phi.degree(), q = psi.degree();
  const int k = p + q - 1;
  Cochain<T> out(n, k);
  if (k > n) return out;
  const int eps = ((p - 1) * (q - 1)) % 2 ? -1 : 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> x;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) x.push_back(i);
    for (int o = 0; o < n; ++o) {
      T v = circ(phi, psi, x, o);
      const T w = circ(psi, phi, x, o);
      if (eps > 0) v -= w; else v += w;
      out.add_unchecked({mask, o}, v);
    }
  }
  return out;
}

// d(phi x, y) + d(x, phi y) - phi d(x, y) on basis pairs.
template <class T>
Cochain<T> derivation_coboundary(const Cochain<T>& d, const Cochain<T>& phi) {
  const int n = d.dim();
  Cochain<T> out(n, 2);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int o = 0; o < n; ++o) {
        T v(0);
        for (int z = 0; z < n; ++z) {
          v += eval(phi, {x}, z) * eval(d, {z, y}, o);
          v += eval(phi, {y}, z) * eval(d, {x, z}, o);
          v -= eval(d, {x, y}, z) * eval(phi, {z}, o);
        }
        out.add_unchecked({(1u << x) | (1u << y), o}, v);
      }
  return out;
}

// Jacobiator d(d(x,y),z) + cyclic, summed over all basis triples; true iff all vanish.
template <class T>
bool jacobi_by_triples(const Cochain<T>& d) {
  const int n = d.dim();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z)
        for (int o = 0; o < n; ++o) {
          T v(0);
          for (int w = 0; w < n; ++w) {
            v += eval(d, {x, y}, w) * eval(d, {w, z}, o);
            v += eval(d, {y, z}, w) * eval(d, {w, x}, o);
            v += eval(d, {z, x}, w) * eval(d, {w, y}, o);
          }
          if (!liemod::is_zero(v)) return false;
        }
  return true;
}

// Push-forward evaluated on basis tuples: G phi(H x1, ..., H xk), H = G^-1.
inline Cochain<Rational> push_forward(const Cochain<Rational>& phi, const Matrix<Rational>& g) {
  const int n = phi.dim(), k = phi.degree();
  const Matrix<Rational> h = naive_inverse(g);
  Cochain<Rational> out(n, k);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> x;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) x.push_back(i);
    // expand multilinearly over all index tuples
    std::vector<Rational> val(n, Rational(0));
    std::vector<int> t(k, 0);
    for (;;) {
      Rational coef = 1;
      for (int a = 0; a < k && coef != 0; ++a) coef *= h(t[a], x[a]);
      if (coef != 0)
        for (int o = 0; o < n; ++o) val[o] += coef * eval(phi, t, o);
      int a = 0;
      while (a < k && ++t[a] == n) t[a++] = 0;
      if (a == k) break;
    }
    for (int o = 0; o < n; ++o) {
      Rational s = 0;
      for (int j = 0; j < n; ++j) s += g(o, j) * val[j];
      out.add_unchecked({mask, o}, s);
    }
  }
  return out;
}

// dim of the center: kernel of v -> (d(v, e_j))_j.
inline std::size_t center_dim(const Cochain<Rational>& d) {
  const int n = d.dim();
  Matrix<Rational> m = Matrix<Rational>::Zero(n * n, n);
  for (int v = 0; v < n; ++v)
    for (int j = 0; j < n; ++j)
      for (int o = 0; o < n; ++o) m(j * n + o, v) = eval(d, {v, j}, o);
  return n - naive_rank(m);
}

// Random cochain with entries in [-range, range], each term present with probability `density`.
inline Cochain<Rational> random_cochain(std::mt19937_64& rng, int n, int k, double density = 0.5, int range = 2) {
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> v(-range, range);
  Cochain<Rational> out(n, k);
  for (const auto& b : liemod::cochain_basis(n, k))
    if (u(rng) < density) out.add_unchecked(b, Rational(v(rng)));
  return out;
}

inline Matrix<Rational> random_invertible(std::mt19937_64& rng, int n, int range = 3) {
  std::uniform_int_distribution<int> v(-range, range);
  for (;;) {
    Matrix<Rational> g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = v(rng);
    if (naive_rank(g) == static_cast<std::size_t>(n)) return g;
  }
}

} // namespace oracle
