#include "liemod/cohomology.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace liemod {

std::size_t cochain_dim(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw Error(ErrorCode::OutOfRange, "C^" + std::to_string(k) + " needs 0 <= k <= n = " + std::to_string(n));
  std::size_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return static_cast<std::size_t>(n) * c;
}

const char* to_string(RankMode mode) {
  switch (mode) {
  case RankMode::ExactAtPoint: return "exact-at-point";
  case RankMode::GenericProbabilistic: return "generic-probabilistic";
  case RankMode::ExactSymbolic: return "exact-symbolic";
  }
  return "?";
}

long CohomologyReport::euler() const {
  long s = 0;
  for (std::size_t k = 0; k < betti.size(); ++k)
    s += (k % 2 == 0 ? 1 : -1) * static_cast<long>(betti[k]);
  return s;
}

std::string CohomologyReport::betti_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < betti.size(); ++k) s += (k ? "," : "") + std::to_string(betti[k]);
  return s + ")";
}

namespace {

void fill_betti(CohomologyReport& r) {
  const int n = r.dim;
  r.betti.assign(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    const std::size_t out = k < n ? r.ranks[k] : 0;
    const std::size_t in = k > 0 ? r.ranks[k - 1] : 0;
    r.betti[k] = cochain_dim(n, k) - out - in;
  }
}

std::vector<std::size_t> exact_ranks(const RationalCochain& d) {
  std::vector<std::size_t> ranks;
  for (int k = 0; k < d.dim(); ++k) ranks.push_back(rank_exact(coboundary_matrix(d, k)));
  return ranks;
}

std::set<std::string> parameters_of(const ScalarCochain& d) {
  std::set<std::string> out;
  for (const auto& [b, c] : d.terms()) {
    const auto ps = c.parameters();
    out.insert(ps.begin(), ps.end());
  }
  return out;
}

void require_jacobi(const ScalarCochain& d) {
  if (!jacobi_check(d)) throw Error(ErrorCode::JacobiFails, "[d,d] = " + to_string(nr_bracket(d, d)));
}

void require_jacobi(const RationalCochain& d) {
  if (!jacobi_check(d)) throw Error(ErrorCode::JacobiFails, "[d,d] = " + to_string(nr_bracket(d, d)));
}

} // namespace

CohomologyReport betti(const RationalCochain& d) {
  require_jacobi(d);
  CohomologyReport r;
  r.dim = d.dim();
  r.mode = RankMode::ExactAtPoint;
  r.ranks = exact_ranks(d);
  fill_betti(r);
  return r;
}

CohomologyReport betti(const ScalarCochain& d, RankMode mode, std::uint64_t seed,
                       const std::vector<Polynomial>& avoid, const Assignment& at, int trials) {
  CohomologyReport r;
  r.dim = d.dim();
  r.mode = mode;
  switch (mode) {
  case RankMode::ExactAtPoint: {
    const RationalCochain e = evaluate(d, at);
    require_jacobi(e);
    r.ranks = exact_ranks(e);
    r.points.push_back(at);
    break;
  }
  case RankMode::ExactSymbolic: {
    require_jacobi(d);
    for (int k = 0; k < d.dim(); ++k) r.ranks.push_back(rank_symbolic(coboundary_matrix(d, k)));
    break;
  }
  case RankMode::GenericProbabilistic: {
    require_jacobi(d);
    const auto params = parameters_of(d);
    std::vector<Polynomial> forbidden = avoid;
    for (const auto& [b, c] : d.terms())
      if (!c.denominator().is_constant()) forbidden.push_back(c.denominator());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(2, 1000000);
    r.seed = seed;
    r.trials = params.empty() ? 1 : trials;
    r.ranks.assign(d.dim(), 0);
    for (int t = 0; t < r.trials; ++t) {
      Assignment point;
      bool found = false;
      for (int attempt = 0; attempt < 1000 && !found; ++attempt) {
        point.clear();
        for (const auto& p : params) point[p] = Rational(dist(rng));
        found = std::none_of(forbidden.begin(), forbidden.end(),
                             [&](const Polynomial& f) { return f.evaluate(point).is_zero(); });
      }
      if (!found) throw Error(ErrorCode::NoValidSample, "no admissible sample point after 1000 tries");
      const auto ranks = exact_ranks(evaluate(d, point));
      for (int k = 0; k < d.dim(); ++k) r.ranks[k] = std::max(r.ranks[k], ranks[k]);
      r.points.push_back(point);
    }
    break;
  }
  }
  fill_betti(r);
  return r;
}

CohomologyReport betti_checked(const ScalarCochain& d, std::uint64_t seed,
                               const std::vector<Polynomial>& avoid) {
  auto mix = [&](std::uint64_t k) { return seed * 0x9E3779B97F4A7C15ull + k; };
  CohomologyReport a = betti(d, RankMode::GenericProbabilistic, mix(1), avoid);
  CohomologyReport b = betti(d, RankMode::GenericProbabilistic, mix(2), avoid);
  if (a.ranks == b.ranks) return a;
  CohomologyReport c = betti(d, RankMode::GenericProbabilistic, mix(3), avoid);
  CohomologyReport e = betti(d, RankMode::GenericProbabilistic, mix(4), avoid);
  if (c.ranks == e.ranks) {
    c.resampled = true;
    return c;
  }
  CohomologyReport s = betti(d, RankMode::ExactSymbolic);
  s.escalated = true;
  s.seed = seed;
  return s;
}

std::size_t center(const RationalCochain& d) {
  require_jacobi(d);
  const int n = d.dim();
  // row (x, out), column v: coefficient of e_out in d(e_v, e_x)
  RationalMatrix m = RationalMatrix::Zero(n * n, n);
  for (int v = 0; v < n; ++v)
    for (int x = 0; x < n; ++x) {
      const RationalVector img = apply(d, {v, x});
      for (int o = 0; o < n; ++o) m(x * n + o, v) = img(o);
    }
  return static_cast<std::size_t>(n) - rank_exact(m);
}

namespace {

// span of d(a, b) for columns a of `left`, b of `right`, as a basis matrix
RationalMatrix bracket_span(const RationalCochain& d, const RationalMatrix& left, const RationalMatrix& right) {
  const int n = d.dim();
  std::vector<RationalVector> pair(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pair[i * n + j] = apply(d, {i, j});
  RationalMatrix gens = RationalMatrix::Zero(n, left.cols() * right.cols());
  for (Eigen::Index a = 0; a < left.cols(); ++a)
    for (Eigen::Index b = 0; b < right.cols(); ++b) {
      RationalVector v = RationalVector::Zero(n);
      for (int i = 0; i < n; ++i) {
        if (left(i, a).is_zero()) continue;
        for (int j = 0; j < n; ++j)
          if (!right(j, b).is_zero()) v += (left(i, a) * right(j, b)) * pair[i * n + j];
      }
      gens.col(a * right.cols() + b) = v;
    }
  const Echelon<Rational> e = rref<Rational>(gens.transpose());
  return e.reduced.topRows(static_cast<Eigen::Index>(e.rank())).transpose();
}

} // namespace

InvariantVector series_invariants(const RationalCochain& d) {
  require_jacobi(d);
  const int n = d.dim();
  InvariantVector iv;
  iv.center_dim = center(d);
  const RationalMatrix full = RationalMatrix::Identity(n, n);

  RationalMatrix cur = full;
  iv.derived_series.push_back(n);
  for (int step = 0; step <= n; ++step) {
    RationalMatrix next = bracket_span(d, cur, cur);
    if (static_cast<std::size_t>(next.cols()) >= iv.derived_series.back()) break;
    iv.derived_series.push_back(next.cols());
    cur = next;
    if (cur.cols() == 0) break;
  }
  cur = full;
  iv.lower_central_series.push_back(n);
  for (int step = 0; step <= n; ++step) {
    RationalMatrix next = bracket_span(d, full, cur);
    if (static_cast<std::size_t>(next.cols()) >= iv.lower_central_series.back()) break;
    iv.lower_central_series.push_back(next.cols());
    cur = next;
    if (cur.cols() == 0) break;
  }
  iv.is_solvable = iv.derived_series.back() == 0;
  iv.is_nilpotent = iv.lower_central_series.back() == 0;
  iv.betti = betti(d).betti;
  return iv;
}

std::string InvariantVector::to_string() const {
  auto list = [](const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  std::ostringstream os;
  os << "center\t" << center_dim << "\n"
     << "derived\t" << list(derived_series) << "\n"
     << "lower_central\t" << list(lower_central_series) << "\n"
     << "solvable\t" << (is_solvable ? "yes" : "no") << "\n"
     << "nilpotent\t" << (is_nilpotent ? "yes" : "no") << "\n"
     << "betti\t" << list(betti) << "\n";
  return os.str();
}

} // namespace liemod
