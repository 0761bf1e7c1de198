#include "liemod/polynomial.hpp"

#include "liemod/error.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace liemod {

namespace {

int degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

Polynomial normalized_sign(Polynomial p) {
  if (!p.is_zero() && p.leading_coefficient() < 0) return -p;
  return p;
}

Polynomial content_in(const Polynomial& p, const std::string& var) {
  Polynomial g;
  for (const auto& [exp, coef] : p.coefficients_in(var)) {
    g = gcd(g, coef);
    if (g.is_constant() && g.constant_value() == 1) break;
  }
  return g;
}

Polynomial primitive_in(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return p;
  auto q = divide_exact(p, content_in(p, var));
  return *q;
}

// Pseudo-remainder of a by b with respect to var; deg_var(result) < deg_var(b).
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, const std::string& var) {
  const int db = b.degree_in(var);
  const Polynomial lcb = b.coefficients_in(var).at(db);
  const Polynomial x = Polynomial::variable(var, b.vars());
  while (!a.is_zero()) {
    const int da = a.degree_in(var);
    if (da < db) break;
    const Polynomial lca = a.coefficients_in(var).at(da);
    a = lcb * a - lca * x.pow(static_cast<unsigned>(da - db)) * b;
  }
  return a;
}

} // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = degree_of(a);
  const int db = degree_of(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(long value) {
  if (value != 0) terms_.emplace(Exponents{}, Integer(value));
}

Polynomial::Polynomial(const Integer& value) {
  if (!value.is_zero()) terms_.emplace(Exponents{}, value);
}

Polynomial::Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

Polynomial Polynomial::variable(const std::string& name) { return variable(name, {name}); }

Polynomial Polynomial::variable(const std::string& name, const std::vector<std::string>& vars) {
  Polynomial p(vars);
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) {
    p.vars_.push_back(name);
    Exponents e(p.vars_.size(), 0);
    e.back() = 1;
    p.terms_.emplace(std::move(e), Integer(1));
    return p;
  }
  Exponents e(vars.size(), 0);
  e[static_cast<std::size_t>(it - vars.begin())] = 1;
  p.terms_.emplace(std::move(e), Integer(1));
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && degree_of(terms_.begin()->first) == 0;
}

Integer Polynomial::constant_value() const {
  for (const auto& [e, c] : terms_)
    if (degree_of(e) == 0) return c;
  return Integer(0);
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return degree_of(terms_.begin()->first);
}

int Polynomial::degree_in(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return terms_.empty() ? -1 : 0;
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return d;
}

std::set<std::string> Polynomial::occurring_vars() const {
  std::set<std::string> out;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) out.insert(vars_[i]);
  return out;
}

Integer Polynomial::leading_coefficient() const {
  return terms_.empty() ? Integer(0) : terms_.begin()->second;
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) {
    g = bmp::gcd(g, c);
    if (g == 1) break;
  }
  return bmp::abs(g);
}

Polynomial Polynomial::with_vars(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<std::size_t> map(vars_.size(), vars.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it != vars.end()) map[i] = static_cast<std::size_t>(it - vars.begin());
  }
  Polynomial out(vars);
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] == vars.size())
        throw Error(ErrorCode::InvalidArgument, "variable '" + vars_[i] + "' dropped while re-embedding");
      ne[map[i]] = e[i];
    }
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

Polynomial Polynomial::trimmed() const {
  const auto occ = occurring_vars();
  std::vector<std::string> keep;
  for (const auto& v : vars_)
    if (occ.count(v)) keep.push_back(v);
  return with_vars(keep);
}

void unify(Polynomial& a, Polynomial& b) {
  if (a.vars_ == b.vars_) return;
  std::vector<std::string> merged = a.vars_;
  for (const auto& v : b.vars_)
    if (std::find(merged.begin(), merged.end(), v) == merged.end()) merged.push_back(v);
  a = a.with_vars(merged);
  b = b.with_vars(merged);
}

void Polynomial::add_term(const Exponents& exps, const Integer& coef) {
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exps, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.vars_ == vars_) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }
  Polynomial r = rhs;
  unify(*this, r);
  for (const auto& [e, c] : r.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(const Integer& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  Polynomial r = rhs;
  unify(*this, r);
  Polynomial out(vars_);
  Exponents e(vars_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : r.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  if (a.terms_.size() != b.terms_.size()) return false;
  Polynomial x = a, y = b;
  unify(x, y);
  return x.terms_ == y.terms_;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1);
  result = result.with_vars(vars_);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::divided_by(const Integer& d) const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c /= d;
  return out;
}

Rational Polynomial::evaluate(const Assignment& at) const {
  std::vector<const Rational*> values(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = at.find(vars_[i]);
    if (it != at.end()) values[i] = &it->second;
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = Rational(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (values[i] == nullptr)
        throw Error(ErrorCode::MissingParameter, "no value for parameter '" + vars_[i] + "'");
      for (int k = 0; k < e[i]; ++k) t *= *values[i];
    }
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& values) const {
  std::vector<const Polynomial*> repl(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = values.find(vars_[i]);
    if (it != values.end()) repl[i] = &it->second;
  }
  Polynomial out(vars_);
  std::map<std::pair<std::size_t, int>, Polynomial> powers;
  for (const auto& [e, c] : terms_) {
    Polynomial term(vars_);
    Exponents kept = e;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (repl[i] != nullptr) kept[i] = 0;
    term.add_term(kept, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (repl[i] == nullptr || e[i] == 0) continue;
      auto key = std::make_pair(i, e[i]);
      auto it = powers.find(key);
      if (it == powers.end()) it = powers.emplace(key, repl[i]->pow(static_cast<unsigned>(e[i]))).first;
      term *= it->second;
    }
    out += term;
  }
  return out;
}

std::map<int, Polynomial> Polynomial::coefficients_in(const std::string& var) const {
  std::map<int, Polynomial> out;
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) {
    if (!terms_.empty()) out.emplace(0, *this);
    return out;
  }
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[idx] = 0;
    auto [pos, inserted] = out.try_emplace(e[idx], Polynomial(vars_));
    pos->second.add_term(rest, c);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Integer mag = bmp::abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << mag;
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag << '*' << mono;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  Polynomial r = a, d = b;
  unify(r, d);
  Polynomial q(r.vars());
  const auto& [lead_e, lead_c] = *d.terms().begin();
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms().begin();
    Exponents diff(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      diff[i] = re[i] - lead_e[i];
      if (diff[i] < 0) return std::nullopt;
    }
    if (rc % lead_c != 0) return std::nullopt;
    Polynomial t(r.vars());
    t.add_term(diff, rc / lead_c);
    q += t;
    r -= t * d;
  }
  return q;
}

Polynomial gcd(const Polynomial& a_in, const Polynomial& b_in) {
  if (a_in.is_zero()) return normalized_sign(b_in);
  if (b_in.is_zero()) return normalized_sign(a_in);
  Polynomial a = a_in, b = b_in;
  unify(a, b);

  const auto occ_a = a.occurring_vars();
  const auto occ_b = b.occurring_vars();
  std::string var;
  for (const auto& v : a.vars()) {
    if (occ_a.count(v) || occ_b.count(v)) {
      var = v;
      break;
    }
  }
  if (var.empty()) {
    Polynomial g(bmp::gcd(a.constant_value(), b.constant_value()));
    return normalized_sign(g.with_vars(a.vars()));
  }

  if (a.degree_in(var) == 0 || b.degree_in(var) == 0) {
    const Polynomial& free = a.degree_in(var) == 0 ? a : b;
    const Polynomial& bound = a.degree_in(var) == 0 ? b : a;
    Polynomial g = free;
    for (const auto& [e, coef] : bound.coefficients_in(var)) {
      g = gcd(g, coef);
      if (g.is_constant() && g.constant_value() == 1) break;
    }
    return normalized_sign(g);
  }

  const Polynomial ca = content_in(a, var);
  const Polynomial cb = content_in(b, var);
  Polynomial pa = *divide_exact(a, ca);
  Polynomial pb = *divide_exact(b, cb);
  const Polynomial c = gcd(ca, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);

  Polynomial g;
  while (true) {
    Polynomial r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree_in(var) == 0) {
      g = Polynomial(1).with_vars(a.vars());
      break;
    }
    pa = std::move(pb);
    pb = primitive_in(r, var);
  }
  return normalized_sign(c * primitive_in(g, var));
}

} // namespace liemod
