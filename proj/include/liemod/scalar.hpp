#pragma once

#include "liemod/polynomial.hpp"

#include <Eigen/Core>

#include <iosfwd>
#include <set>
#include <string>

namespace liemod {

/// Element of the fraction field Q(params): a quotient of integer polynomials.
///
/// Always stored reduced: polynomial gcd and integer content are cancelled and
/// the denominator's leading coefficient (grlex) is positive. There is no
/// floating-point state anywhere in this type.
class Scalar {
public:
  Scalar() : den_(1) {}
  Scalar(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Integer& value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  Scalar(Polynomial num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(Polynomial num, Polynomial den);

  static Scalar parameter(const std::string& name) { return Scalar(Polynomial::variable(name)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True when no parameter occurs in numerator or denominator.
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  /// Throws Error(ParametricEntry) unless is_rational().
  Rational to_rational() const;
  std::set<std::string> parameters() const;

  Scalar operator-() const { return Scalar(-num_, den_, Reduced{}); }
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Throws Error(DivisionByZero) when rhs is zero.
  Scalar& operator/=(const Scalar& rhs);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Exact: a/b == c/d iff a*d - c*b == 0.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Substitutes polynomial values for parameters.
  Scalar substitute(const std::map<std::string, Polynomial>& values) const;
  /// Substitutes fraction values for parameters.
  Scalar substitute(const std::map<std::string, Scalar>& values) const;

  std::string to_string() const;

private:
  struct Reduced {};
  Scalar(Polynomial num, Polynomial den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

inline bool is_zero(const Scalar& x) { return x.is_zero(); }

/// Exact value of `s` at `assign`.
/// Throws Error(MissingParameter) if a parameter is unassigned and
/// Error(DenominatorVanishes) if the denominator evaluates to zero.
Rational poly_eval(const Scalar& s, const Assignment& assign);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace liemod

namespace Eigen {

template <>
struct NumTraits<liemod::Scalar> : GenericNumTraits<liemod::Scalar> {
  using Real = liemod::Scalar;
  using NonInteger = liemod::Scalar;
  using Literal = liemod::Scalar;
  using Nested = liemod::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 200,
    MulCost = 200,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

} // namespace Eigen
