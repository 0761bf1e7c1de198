#include "liemod/scalar.hpp"

#include "liemod/error.hpp"

#include <ostream>

namespace liemod {

namespace {

Polynomial from_integer(const Integer& v) { return Polynomial(v); }

// Substitutes var -> numer/denom into p and multiplies through by denom^deg_var(p).
// Returns the cleared polynomial and, per substituted variable, the power used.
Polynomial cleared_substitution(const Polynomial& p, const std::map<std::string, Scalar>& values,
                                std::map<std::string, int>& powers) {
  std::map<std::string, Polynomial> direct;
  Polynomial result = p;
  for (const auto& [var, value] : values) {
    const int deg = result.degree_in(var);
    if (deg <= 0) {
      powers[var] = 0;
      continue;
    }
    powers[var] = deg;
    const auto coeffs = result.coefficients_in(var);
    Polynomial acc;
    for (const auto& [e, c] : coeffs) {
      acc += c * value.numerator().pow(static_cast<unsigned>(e)) *
             value.denominator().pow(static_cast<unsigned>(deg - e));
    }
    result = acc;
  }
  return result;
}

} // namespace

Scalar::Scalar(const Rational& value)
    : num_(from_integer(bmp::numerator(value))), den_(from_integer(bmp::denominator(value))) {}

Scalar::Scalar(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Scalar::normalize() {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial(1);
    return;
  }
  if (!den_.is_constant() && !num_.is_constant()) {
    const Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  const Integer c = bmp::gcd(num_.content(), den_.content());
  if (c > 1) {
    num_ = num_.divided_by(c);
    den_ = den_.divided_by(c);
  }
  if (den_.leading_coefficient() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Rational Scalar::to_rational() const {
  if (!is_rational())
    throw Error(ErrorCode::ParametricEntry, "entry '" + to_string() + "' still contains parameters");
  return Rational(num_.constant_value(), den_.constant_value());
}

std::set<std::string> Scalar::parameters() const {
  auto out = num_.occurring_vars();
  const auto d = den_.occurring_vars();
  out.insert(d.begin(), d.end());
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = Scalar();
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero scalar");
  if (is_zero()) return *this;
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

Scalar Scalar::substitute(const std::map<std::string, Polynomial>& values) const {
  return Scalar(num_.substitute(values), den_.substitute(values));
}

Scalar Scalar::substitute(const std::map<std::string, Scalar>& values) const {
  std::map<std::string, int> pn, pd;
  Polynomial n = cleared_substitution(num_, values, pn);
  Polynomial d = cleared_substitution(den_, values, pd);
  // num/den = (n / prod w^pn) / (d / prod w^pd)
  for (const auto& [var, value] : values) {
    const int diff = pd[var] - pn[var];
    if (diff > 0) n *= value.denominator().pow(static_cast<unsigned>(diff));
    if (diff < 0) d *= value.denominator().pow(static_cast<unsigned>(-diff));
  }
  if (d.is_zero()) throw Error(ErrorCode::DenominatorVanishes, "denominator vanishes after substitution");
  return Scalar(std::move(n), std::move(d));
}

std::string Scalar::to_string() const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
  const std::string n = num_.to_string(), d = den_.to_string();
  // a product in the denominator needs parentheses too: "1/(2*p)", not "1/2*p"
  const bool wrap_den = den_.terms().size() > 1 || d.find('*') != std::string::npos;
  return (num_.terms().size() > 1 ? "(" + n + ")" : n) + "/" + (wrap_den ? "(" + d + ")" : d);
}

Rational poly_eval(const Scalar& s, const Assignment& assign) {
  const Rational den = s.denominator().evaluate(assign);
  const Rational num = s.numerator().evaluate(assign);
  if (den.is_zero())
    throw Error(ErrorCode::DenominatorVanishes,
                "denominator " + s.denominator().to_string() + " vanishes at " + to_string(assign));
  return num / den;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace liemod
