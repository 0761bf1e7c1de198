#include "liemod/matrix.hpp"

#include <map>
#include <random>
#include <set>

namespace liemod {

namespace {

using IntegerMatrix = Matrix<Integer>;

IntegerMatrix clear_denominators(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Integer d = bmp::denominator(m(i, j));
      if (d != 1) l = bmp::lcm(l, d);
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(i, j) = bmp::numerator(m(i, j)) * (l / bmp::denominator(m(i, j)));
  }
  return out;
}

// Fraction-free elimination with column skipping; T must support exact division via div().
template <class T, class Div>
std::size_t bareiss_rank(Matrix<T> a, Div div) {
  std::size_t rank = 0;
  T prev(1);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = row; i < a.rows(); ++i)
      if (!is_zero(a(i, col))) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    for (Eigen::Index i = row + 1; i < a.rows(); ++i) {
      for (Eigen::Index j = col + 1; j < a.cols(); ++j)
        a(i, j) = div(a(row, col) * a(i, j) - a(i, col) * a(row, j), prev);
      a(i, col) = T(0);
    }
    prev = a(row, col);
    ++row;
    ++rank;
  }
  return rank;
}

} // namespace

std::size_t rank_exact(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss_rank(clear_denominators(m), [](const Integer& a, const Integer& b) { return a / b; });
}

std::size_t rank_exact(const ScalarMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_rational();
  return rank_exact(r);
}

RationalMatrix evaluate(const ScalarMatrix& m, const Assignment& at) {
  RationalMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = poly_eval(m(i, j), at);
  return r;
}

std::size_t rank_generic(const ScalarMatrix& m, std::uint64_t seed, int trials,
                         const std::vector<Polynomial>& avoid) {
  if (trials < 2) throw Error(ErrorCode::InvalidArgument, "rank_generic needs at least 2 trials");
  if (m.rows() == 0 || m.cols() == 0) return 0;
  std::set<std::string> params;
  std::vector<Polynomial> dens;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto ps = m(i, j).parameters();
      params.insert(ps.begin(), ps.end());
      if (!m(i, j).denominator().is_constant()) dens.push_back(m(i, j).denominator());
    }
  for (const auto& a : avoid) {
    const auto ps = a.occurring_vars();
    params.insert(ps.begin(), ps.end());
  }
  if (params.empty()) return rank_exact(m);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(2, 1000000);
  std::size_t best = 0;
  for (int t = 0; t < trials; ++t) {
    std::optional<Assignment> point;
    for (int attempt = 0; attempt < 1000 && !point; ++attempt) {
      Assignment at;
      for (const auto& p : params) at[p] = Rational(dist(rng));
      bool ok = true;
      for (const auto& d : dens) ok = ok && !d.evaluate(at).is_zero();
      for (const auto& a : avoid) ok = ok && !a.evaluate(at).is_zero();
      if (ok) point = std::move(at);
    }
    if (!point) throw Error(ErrorCode::NoValidSample, "every sampled point hits a denominator or avoid locus");
    best = std::max(best, rank_exact(evaluate(m, *point)));
  }
  return best;
}

std::size_t rank_symbolic(const ScalarMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Matrix<Polynomial> a(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Polynomial l(1);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Polynomial& d = m(i, j).denominator();
      if (d.is_constant() && d.constant_value() == 1) continue;
      l = *divide_exact(l * d, gcd(l, d));
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      a(i, j) = m(i, j).numerator() * *divide_exact(l, m(i, j).denominator());
  }
  return bareiss_rank(std::move(a), [](const Polynomial& x, const Polynomial& y) {
    auto q = divide_exact(x, y);
    if (!q) throw Error(ErrorCode::InvalidArgument, "inexact Bareiss division");
    return *q;
  });
}

} // namespace liemod
