#pragma once

#include "liemod/numeric.hpp"
#include "liemod/polynomial.hpp"

#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace liemod {

/// Multivariate power series truncated at total degree `order`.
/// Coefficients of degree > order are never stored.
template <class T>
class TruncatedSeries {
public:
  using CoeffMap = std::map<Exponents, T, GrlexGreater>;

  TruncatedSeries() = default;
  TruncatedSeries(int nvars, int order) : nvars_(nvars), order_(order) {}

  static TruncatedSeries constant(int nvars, int order, const T& c) {
    TruncatedSeries s(nvars, order);
    s.add(Exponents(nvars, 0), c);
    return s;
  }
  static TruncatedSeries variable(int nvars, int order, int i) {
    TruncatedSeries s(nvars, order);
    Exponents e(nvars, 0);
    e[i] = 1;
    s.add(e, T(1));
    return s;
  }

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  static int degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

  void add(const Exponents& e, const T& c) {
    if (degree(e) > order_ || liemod::is_zero(c)) return;
    auto [it, fresh] = coeffs_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (liemod::is_zero(it->second)) coeffs_.erase(it);
    }
  }
  T coeff(const Exponents& e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? T(0) : it->second;
  }

  /// Homogeneous part of total degree n.
  TruncatedSeries degree_part(int n) const {
    TruncatedSeries s(nvars_, order_);
    for (const auto& [e, c] : coeffs_)
      if (degree(e) == n) s.coeffs_.emplace(e, c);
    return s;
  }
  /// Lowest total degree present; order+1 for the zero series.
  int valuation() const {
    int v = order_ + 1;
    for (const auto& [e, c] : coeffs_) v = std::min(v, degree(e));
    return v;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries s = *this;
    for (auto& [e, c] : s.coeffs_) c = -c;
    return s;
  }
  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, c);
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    for (const auto& [e, c] : o.coeffs_) add(e, -c);
    return *this;
  }
  TruncatedSeries& operator*=(const T& s) {
    if (liemod::is_zero(s)) { coeffs_.clear(); return *this; }
    for (auto& [e, c] : coeffs_) c *= s;
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const T& s, TruncatedSeries a) { return a *= s; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(a.nvars_, std::min(a.order_, b.order_));
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.coeffs_) {
      const int da = degree(ea);
      for (const auto& [eb, cb] : b.coeffs_) {
        if (da + degree(eb) > r.order_) continue;
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add(e, ca * cb);
      }
    }
    return r;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.nvars_ == b.nvars_ && a.coeffs_ == b.coeffs_;
  }

  /// "t1^2 - 1/2*t1*t2", terms in descending graded order.
  std::string to_string(const std::vector<std::string>& names) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : coeffs_) {
      std::string mono;
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += names[i];
        if (e[i] > 1) mono += '^' + std::to_string(e[i]);
      }
      std::string coef = liemod::to_string(c);
      const bool neg = !coef.empty() && coef[0] == '-';
      if (neg) coef.erase(0, 1);
      std::string term = mono.empty() ? coef : (coef == "1" ? mono : coef + "*" + mono);
      if (out.empty()) out = (neg ? "-" : "") + term;
      else out += (neg ? " - " : " + ") + term;
    }
    return out;
  }

private:
  int nvars_ = 0;
  int order_ = 0;
  CoeffMap coeffs_;
};

using RationalSeries = TruncatedSeries<Rational>;

} // namespace liemod
