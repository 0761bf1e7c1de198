#include "liemod/deformation.hpp"
#include "liemod/catalog.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace liemod {

namespace {

void require_jacobi(const RationalCochain& d) {
  if (!jacobi_check(d)) throw Error(ErrorCode::JacobiFails, "[d,d] = " + to_string(nr_bracket(d, d)));
}

// Appends columns of `candidates` that raise the rank of `span`; returns the chosen ones.
std::vector<RationalVector> greedy_extend(RationalMatrix& span, const RationalMatrix& candidates) {
  std::vector<RationalVector> chosen;
  std::size_t rank = rank_exact(span);
  for (Eigen::Index j = 0; j < candidates.cols(); ++j) {
    RationalMatrix trial(span.rows(), span.cols() + 1);
    trial << span, candidates.col(j);
    const std::size_t r = rank_exact(trial);
    if (r > rank) {
      span = std::move(trial);
      rank = r;
      chosen.push_back(candidates.col(j));
    }
  }
  return chosen;
}

RationalMatrix column_basis(const RationalMatrix& m) {
  const Echelon<Rational> e = rref<Rational>(m.transpose());
  return e.reduced.topRows(static_cast<Eigen::Index>(e.rank())).transpose();
}

RationalMatrix c3_matrix(const Prebases& pb) {
  const int n = pb.dim;
  const auto dim = static_cast<Eigen::Index>(cochain_basis(n, 3).size());
  RationalMatrix p(dim, dim);
  Eigen::Index col = 0;
  for (const auto* part : {&pb.alpha, &pb.beta, &pb.tau})
    for (const auto& c : *part) p.col(col++) = to_vector(c);
  return p;
}

Scalar monomial(const Exponents& e, const std::vector<std::string>& names) {
  Polynomial m(1);
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) m *= Polynomial::variable(names[i], names).pow(static_cast<unsigned>(e[i]));
  return Scalar(m);
}

Scalar series_to_scalar(const RationalSeries& s, const std::vector<std::string>& names) {
  Scalar out;
  for (const auto& [e, c] : s.coeffs()) out += Scalar(c) * monomial(e, names);
  return out;
}

} // namespace

Prebases h2_prebasis(const RationalCochain& d) {
  require_jacobi(d);
  const int n = d.dim();
  Prebases pb;
  pb.dim = n;
  const RationalMatrix d1 = coboundary_matrix(d, 1);
  const RationalMatrix d2 = coboundary_matrix(d, 2);
  const RationalMatrix d3 = coboundary_matrix(d, 3);
  const auto c2 = static_cast<Eigen::Index>(cochain_basis(n, 2).size());
  const auto c3 = static_cast<Eigen::Index>(cochain_basis(n, 3).size());

  RationalMatrix span = column_basis(d1);
  for (const auto& v : greedy_extend(span, nullspace(d2))) pb.delta.push_back(from_vector(n, 2, RationalVector(v)));

  const RationalMatrix b3 = column_basis(d2);
  for (Eigen::Index j = 0; j < b3.cols(); ++j) pb.beta.push_back(from_vector(n, 3, RationalVector(b3.col(j))));
  RationalMatrix span3 = b3;
  const RationalMatrix z3 = d3.rows() == 0 ? RationalMatrix(RationalMatrix::Identity(c3, c3)) : nullspace(d3);
  for (const auto& v : greedy_extend(span3, z3)) pb.alpha.push_back(from_vector(n, 3, RationalVector(v)));
  for (const auto& v : greedy_extend(span3, RationalMatrix::Identity(c3, c3)))
    pb.tau.push_back(from_vector(n, 3, RationalVector(v)));

  for (const auto& b : pb.beta) {
    const RationalVector half = to_vector(b) * Rational(1, 2);
    const auto g = solve<Rational>(d2, half);
    if (!g) throw Error(ErrorCode::InvalidArgument, "coboundary without a preimage");
    pb.gamma.push_back(from_vector(n, 2, RationalVector(*g)));
  }
  (void)c2;
  return pb;
}

std::vector<std::string> deformation_parameters(std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= m; ++i) out.push_back("t" + std::to_string(i));
  return out;
}

ScalarCochain infinitesimal(const RationalCochain& d) { return infinitesimal(d, h2_prebasis(d)); }

ScalarCochain infinitesimal(const RationalCochain& d, const Prebases& pb) {
  const auto names = deformation_parameters(pb.delta.size());
  ScalarCochain out = to_scalar(d);
  for (std::size_t i = 0; i < pb.delta.size(); ++i) {
    const Scalar t(Polynomial::variable(names[i], names));
    for (const auto& [b, c] : pb.delta[i].terms()) out.add_unchecked(b, Scalar(c) * t);
  }
  return out;
}

RationalVector c3_coordinates(const Prebases& pb, const RationalCochain& w) {
  const auto x = solve<Rational>(c3_matrix(pb), to_vector(w));
  if (!x) throw Error(ErrorCode::SingularMatrix, "alpha, beta, tau do not span C^3");
  return *x;
}

namespace {

// For every u_k: is u_k = sum a_j r_j modulo terms of degree > n, with deg a_j <= n - 2?
bool in_ideal_through(const std::vector<RationalSeries>& r, const RationalSeries& u, int n) {
  std::vector<std::pair<std::size_t, Exponents>> unknowns;
  const int m = u.nvars();
  // monomials of degree <= n-2
  std::vector<Exponents> monos;
  Exponents e(m, 0);
  std::function<void(int, int)> gen = [&](int var, int left) {
    if (var == m) { monos.push_back(e); return; }
    for (int k = 0; k <= left; ++k) {
      e[var] = k;
      gen(var + 1, left - k);
    }
    e[var] = 0;
  };
  if (n - 2 >= 0) gen(0, n - 2);
  for (std::size_t j = 0; j < r.size(); ++j)
    for (const auto& mu : monos) unknowns.emplace_back(j, mu);

  std::map<Exponents, Eigen::Index, GrlexGreater> rows;
  auto row_of = [&](const Exponents& nu) {
    auto it = rows.find(nu);
    if (it != rows.end()) return it->second;
    const auto idx = static_cast<Eigen::Index>(rows.size());
    rows.emplace(nu, idx);
    return idx;
  };
  std::vector<std::tuple<Eigen::Index, Eigen::Index, Rational>> entries;
  for (std::size_t col = 0; col < unknowns.size(); ++col) {
    const auto& [j, mu] = unknowns[col];
    for (const auto& [er, c] : r[j].coeffs()) {
      Exponents nu(m);
      int deg = 0;
      for (int i = 0; i < m; ++i) { nu[i] = er[i] + mu[i]; deg += nu[i]; }
      if (deg > n) continue;
      entries.emplace_back(row_of(nu), static_cast<Eigen::Index>(col), c);
    }
  }
  std::vector<std::pair<Eigen::Index, Rational>> rhs;
  for (const auto& [eu, c] : u.coeffs())
    if (RationalSeries::degree(eu) <= n) rhs.emplace_back(row_of(eu), c);
  if (rhs.empty()) return true;
  if (unknowns.empty()) return false;
  RationalMatrix a = RationalMatrix::Zero(static_cast<Eigen::Index>(rows.size()),
                                          static_cast<Eigen::Index>(unknowns.size()));
  for (const auto& [i, j, c] : entries) a(i, j) += c;
  RationalVector b = RationalVector::Zero(static_cast<Eigen::Index>(rows.size()));
  for (const auto& [i, c] : rhs) b(i) = c;
  return solve<Rational>(a, b).has_value();
}

} // namespace

VersalResult versal(const RationalCochain& d, int order) {
  if (order < 2) throw Error(ErrorCode::OrderTooSmall, "versal deformation needs order >= 2");
  VersalResult res;
  res.prebases = h2_prebasis(d);
  res.order = order;
  const Prebases& pb = res.prebases;
  const int m = static_cast<int>(pb.delta.size());
  const auto na = pb.alpha.size(), nb = pb.beta.size(), nt = pb.tau.size();
  res.t = deformation_parameters(m);

  std::vector<RationalCochain> e = pb.delta;
  e.insert(e.end(), pb.gamma.begin(), pb.gamma.end());
  const RationalMatrix pinv = inverse(c3_matrix(pb));

  struct Pair {
    std::size_t a, b;
    RationalVector coords;
  };
  std::vector<Pair> pairs;
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = a; b < e.size(); ++b) {
      const RationalCochain br = nr_bracket(e[a], e[b]);
      if (br.is_zero()) continue;
      RationalVector v = pinv * to_vector(br);
      if (a != b) v *= Rational(2);
      pairs.push_back({a, b, std::move(v)});
    }

  std::vector<RationalSeries> c(e.size(), RationalSeries(m, order));
  for (int i = 0; i < m; ++i) c[i] = RationalSeries::variable(m, order, i);

  auto bracket_cc = [&] {
    std::vector<RationalSeries> w(na + nb + nt, RationalSeries(m, order));
    for (const auto& p : pairs) {
      if (c[p.a].is_zero() || c[p.b].is_zero()) continue;
      const RationalSeries prod = c[p.a] * c[p.b];
      if (prod.is_zero()) continue;
      for (Eigen::Index k = 0; k < p.coords.size(); ++k)
        if (!p.coords(k).is_zero()) w[k] += p.coords(k) * prod;
    }
    return w;
  };

  for (int n = 2; n <= order; ++n) {
    const auto w = bracket_cc();
    for (std::size_t j = 0; j < nb; ++j) c[m + j] -= w[na + j].degree_part(n);
  }
  const auto w = bracket_cc();
  for (std::size_t j = 0; j < nb; ++j) {
    res.x.push_back(c[m + j]);
    res.residual_beta.push_back(c[m + j] + w[na + j]);
  }
  for (std::size_t i = 0; i < na; ++i) res.relations.push_back(w[i]);
  for (std::size_t k = 0; k < nt; ++k) res.obstructions_tau.push_back(w[na + nb + k]);

  for (int n = 2; n <= order; ++n) {
    bool ok = std::all_of(res.obstructions_tau.begin(), res.obstructions_tau.end(),
                          [&](const RationalSeries& u) { return in_ideal_through(res.relations, u, n); });
    IdealCheck chk;
    chk.degree = n;
    chk.status = ok ? IdealCheck::Status::Holds
                    : (n == order ? IdealCheck::Status::Inconclusive : IdealCheck::Status::Fails);
    res.ideal.push_back(chk);
  }
  return res;
}

ScalarCochain VersalResult::deformed(const RationalCochain& d) const {
  ScalarCochain out = infinitesimal(d, prebases);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j].is_zero()) continue;
    const Scalar xs = series_to_scalar(x[j], t);
    for (const auto& [b, c] : prebases.gamma[j].terms()) out.add_unchecked(b, Scalar(c) * xs);
  }
  return out;
}

std::string VersalResult::to_string() const {
  std::ostringstream os;
  if (prebases.delta.empty()) {
    os << "rigid: no deformation parameters\n";
    return os.str();
  }
  os << "parameters\t" << t.size() << "\n";
  os << "order\t" << order << "\n";
  for (std::size_t i = 0; i < prebases.delta.size(); ++i)
    os << "delta" << i + 1 << "\t" << liemod::to_string(prebases.delta[i]) << "\n";
  std::size_t nonzero = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j].is_zero()) continue;
    ++nonzero;
    os << "x" << j + 1 << "\t" << x[j].to_string(t) << "\t# gamma" << j + 1 << " = "
       << liemod::to_string(prebases.gamma[j]) << "\n";
  }
  if (nonzero == 0) os << "x\tall zero\n";
  os << "relations\t" << relations.size() << "\n";
  for (std::size_t i = 0; i < relations.size(); ++i)
    os << "r" << i + 1 << "\t" << relations[i].to_string(t) << "\n";
  for (const auto& chk : ideal) {
    os << "ideal_check\tdegree " << chk.degree << "\t";
    switch (chk.status) {
    case IdealCheck::Status::Holds: os << "holds"; break;
    case IdealCheck::Status::Fails: os << "FAILS"; break;
    case IdealCheck::Status::Inconclusive: os << "inconclusive (truncation boundary)"; break;
    }
    os << "\n";
  }
  return os.str();
}

bool verify_parametric_iso(const ScalarCochain& family, const ScalarCochain& target, const ScalarMatrix& g) {
  if (family.dim() != target.dim() || family.degree() != target.degree())
    throw Error(ErrorCode::DimensionMismatch, "family and target live in different spaces");
  return transform(family, g) == target;
}

const char* to_string(WitnessResult::Status s) {
  switch (s) {
  case WitnessResult::Status::Found: return "found";
  case WitnessResult::Status::InvariantMismatch: return "invariant-mismatch";
  case WitnessResult::Status::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

namespace {

Polynomial numerator_after(const Polynomial& p, const std::map<std::string, Scalar>& sol) {
  return Scalar(p).substitute(sol).numerator();
}

} // namespace

WitnessResult iso_witness_search(const RationalCochain& d1, const RationalCochain& d2, int budget,
                                 std::uint64_t seed) {
  if (d1.dim() != d2.dim()) throw Error(ErrorCode::DimensionMismatch, "algebras of different dimension");
  WitnessResult res;
  const int n = d1.dim();
  const InvariantVector i1 = series_invariants(d1);
  const InvariantVector i2 = series_invariants(d2);
  if (!(i1 == i2)) {
    res.status = WitnessResult::Status::InvariantMismatch;
    std::ostringstream os;
    os << "center " << i1.center_dim << " vs " << i2.center_dim << ", betti "
       << betti_to_string(i1.betti) << " vs " << betti_to_string(i2.betti);
    res.detail = os.str();
    return res;
  }
  if (d1 == d2) {
    res.status = WitnessResult::Status::Found;
    res.witness = RationalMatrix::Identity(n, n);
    return res;
  }

  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) vars.push_back("g" + std::to_string(i) + "_" + std::to_string(j));
  Matrix<Scalar> g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = Scalar(Polynomial::variable(vars[i * n + j], vars));

  // G d1(e_a, e_b) - d2(G e_a, G e_b) = 0
  std::vector<Polynomial> eqs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<Scalar> lhs(n), rhs(n);
      const RationalVector v = apply(d1, {a, b});
      for (int k = 0; k < n; ++k)
        for (int o = 0; o < n; ++o)
          if (!v(o).is_zero()) lhs[k] += g(k, o) * Scalar(v(o));
      for (const auto& [bt, c] : d2.terms()) {
        const auto idx = bt.indices();
        const int i = idx[0] - 1, j = idx[1] - 1;
        rhs[bt.output] += Scalar(c) * (g(i, a) * g(j, b) - g(j, a) * g(i, b));
      }
      for (int k = 0; k < n; ++k) {
        const Scalar diff = lhs[k] - rhs[k];
        if (!diff.is_zero()) eqs.push_back(diff.numerator());
      }
    }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int trial = 0; trial < budget; ++trial) {
    res.trials = trial + 1;
    std::map<std::string, Scalar> sub;
    std::vector<Polynomial> cur = eqs;
    bool ok = true;
    for (;;) {
      cur.erase(std::remove_if(cur.begin(), cur.end(), [](const Polynomial& p) { return p.is_zero(); }), cur.end());
      if (std::any_of(cur.begin(), cur.end(), [](const Polynomial& p) { return p.is_constant(); })) {
        ok = false;
        break;
      }
      std::vector<const Polynomial*> lin;
      for (const auto& p : cur)
        if (p.total_degree() <= 1) lin.push_back(&p);
      std::map<std::string, Scalar> sol;
      if (!lin.empty()) {
        std::set<std::string> present;
        for (const auto* p : lin) {
          const auto o = p->occurring_vars();
          present.insert(o.begin(), o.end());
        }
        std::vector<std::string> lv;
        for (const auto& v : vars)
          if (present.count(v)) lv.push_back(v);
        const auto cols = static_cast<Eigen::Index>(lv.size());
        RationalMatrix a = RationalMatrix::Zero(static_cast<Eigen::Index>(lin.size()), cols + 1);
        for (std::size_t r = 0; r < lin.size(); ++r) {
          const Polynomial& p = *lin[r];
          for (const auto& [e, c] : p.terms()) {
            int which = -1;
            for (std::size_t i = 0; i < e.size(); ++i)
              if (e[i] == 1) which = static_cast<int>(i);
            if (which < 0) { a(r, cols) = Rational(c); continue; }
            const auto it = std::find(lv.begin(), lv.end(), p.vars()[which]);
            a(r, it - lv.begin()) = Rational(c);
          }
        }
        const Echelon<Rational> e = rref(a);
        if (!e.pivots.empty() && e.pivots.back() == cols) { ok = false; break; }
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
          Scalar value(-e.reduced(r, cols));
          for (Eigen::Index j = e.pivots[r] + 1; j < cols; ++j)
            if (!e.reduced(r, j).is_zero())
              value -= Scalar(e.reduced(r, j)) * Scalar(Polynomial::variable(lv[j], vars));
          sol[lv[e.pivots[r]]] = value;
        }
      } else {
        std::vector<std::string> candidates;
        std::set<std::string> present;
        for (const auto& p : cur) {
          const auto o = p.occurring_vars();
          present.insert(o.begin(), o.end());
        }
        for (const auto& v : vars)
          if (!sub.count(v) && present.count(v)) candidates.push_back(v);
        if (candidates.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        sol[candidates[pick(rng)]] = Scalar(static_cast<long>(small(rng)));
      }
      for (auto& [k, v] : sub) v = v.substitute(sol);
      for (const auto& [k, v] : sol) sub[k] = v;
      for (auto& p : cur) p = numerator_after(p, sol);
    }
    if (!ok) continue;
    std::map<std::string, Scalar> rest;
    for (const auto& v : vars)
      if (!sub.count(v)) rest[v] = Scalar(static_cast<long>(small(rng)));
    RationalMatrix w(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto& name = vars[i * n + j];
        const Scalar val = sub.count(name) ? sub.at(name).substitute(rest) : rest.at(name);
        w(i, j) = val.to_rational();
      }
    if (determinant(w).is_zero()) continue;
    if (!(transform(d1, w) == d2)) continue;
    res.status = WitnessResult::Status::Found;
    res.witness = w;
    return res;
  }
  res.status = WitnessResult::Status::BudgetExhausted;
  res.detail = "no witness within " + std::to_string(budget) + " trials (inconclusive)";
  return res;
}

} // namespace liemod
