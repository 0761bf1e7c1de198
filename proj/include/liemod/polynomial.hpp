#pragma once

#include "liemod/numeric.hpp"

#include <Eigen/Core>

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace liemod {

/// Exponent vector, one entry per declared variable.
using Exponents = std::vector<int>;

/// Graded-lexicographic order, descending: the leading term sorts first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with integer coefficients.
///
/// Each polynomial carries its own ordered variable list. Binary operations on
/// polynomials with different lists first merge them (left operand's order
/// first), so parameters keep the order in which they were declared.
class Polynomial {
public:
  using TermMap = std::map<Exponents, Integer, GrlexGreater>;

  Polynomial() = default;
  Polynomial(long value);  // NOLINT(google-explicit-constructor)
  Polynomial(const Integer& value);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<std::string> vars);

  static Polynomial variable(const std::string& name);
  static Polynomial variable(const std::string& name, const std::vector<std::string>& vars);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value; only meaningful when is_constant().
  Integer constant_value() const;

  int total_degree() const;
  int degree_in(const std::string& var) const;
  std::set<std::string> occurring_vars() const;

  /// Leading coefficient under the grlex order (0 for the zero polynomial).
  Integer leading_coefficient() const;
  /// Gcd of all coefficients, non-negative.
  Integer content() const;

  /// The same polynomial expressed over `vars`, which must contain every occurring variable.
  Polynomial with_vars(const std::vector<std::string>& vars) const;
  /// Drops variables that do not occur.
  Polynomial trimmed() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Integer& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned exponent) const;

  /// Divides every coefficient by `d`, which must divide them all.
  Polynomial divided_by(const Integer& d) const;

  /// Evaluates at a full assignment of the occurring variables.
  /// Throws Error(MissingParameter) if an occurring variable is unassigned.
  Rational evaluate(const Assignment& at) const;

  /// Substitutes polynomial values for some variables.
  Polynomial substitute(const std::map<std::string, Polynomial>& values) const;

  /// Coefficients with respect to `var`: exponent of var -> coefficient polynomial.
  std::map<int, Polynomial> coefficients_in(const std::string& var) const;

  /// Deterministic text form, terms in descending grlex order, e.g. "2*p^2*q - r + 1".
  std::string to_string() const;

  /// Adds coef * monomial(exps) where exps is indexed by vars().
  void add_term(const Exponents& exps, const Integer& coef);

private:
  std::vector<std::string> vars_;
  TermMap terms_;

  friend void unify(Polynomial& a, Polynomial& b);
};

/// Rewrites both operands over a common variable list.
void unify(Polynomial& a, Polynomial& b);

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Greatest common divisor, normalized to a positive leading coefficient.
/// gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

} // namespace liemod

namespace Eigen {

template <>
struct NumTraits<liemod::Polynomial> : GenericNumTraits<liemod::Polynomial> {
  using Real = liemod::Polynomial;
  using NonInteger = liemod::Polynomial;
  using Literal = liemod::Polynomial;
  using Nested = liemod::Polynomial;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 100,
    MulCost = 100,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

} // namespace Eigen
