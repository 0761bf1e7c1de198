#include "liemod/extension.hpp"

#include <algorithm>

namespace liemod {

SymmetryMap parse_symmetry_map(std::string_view name) {
  if (name == "sigma") return SymmetryMap::Sigma;
  if (name == "tau") return SymmetryMap::Tau;
  throw Error(ErrorCode::InvalidArgument, "unknown map '" + std::string(name) + "' (sigma|tau)");
}

namespace {

struct Factor {
  Rational value;
  const char* name;
};

Rational checked_div(const Rational& num, std::initializer_list<Factor> den) {
  Rational d = 1;
  for (const auto& f : den) {
    if (f.value.is_zero()) throw Error(ErrorCode::UndefinedAtPoint, std::string("denominator factor ") + f.name + " vanishes");
    d *= f.value;
  }
  return num / d;
}

ProjectivePoint d5_map(SymmetryMap which, const ProjectivePoint& x) {
  const Rational &p = x[0], &q = x[1], &r = x[2];
  if (which == SymmetryMap::Sigma) {
    const Rational pq = p - q;
    return {checked_div(r * pq * pq, {{r - q, "r-q"}, {r - p, "r-p"}}),
            checked_div(p * pq, {{r - p, "r-p"}}),
            checked_div((r - q) * p, {{r - p, "r-p"}})};
  }
  const Rational disc = r * p - q * q;
  return {checked_div(q * q * (p - q), {{disc, "rp-q^2"}}),
          checked_div(-q * q * q * (r - q), {{r, "r"}, {disc, "rp-q^2"}}),
          checked_div(p * (r - q) * (r - q) * q * q, {{r, "r"}, {p - q, "p-q"}, {disc, "rp-q^2"}})};
}

ProjectivePoint d6_map(SymmetryMap which, const ProjectivePoint& x) {
  const Rational &p = x[0], &q = x[1];
  if (which == SymmetryMap::Sigma) return {p - q, p};
  return {p, p - q};
}

bool all_zero(const ProjectivePoint& x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v.is_zero(); });
}

} // namespace

ProjectivePoint symmetry_map(std::string_view family, SymmetryMap which, const ProjectivePoint& point) {
  if (family.starts_with("5.")) family.remove_prefix(2);
  std::size_t arity = 0;
  if (family == "d5") arity = 3;
  else if (family == "d6") arity = 2;
  else throw Error(ErrorCode::UnknownId, "no symmetry maps for family '" + std::string(family) + "'");
  if (point.size() != arity)
    throw Error(ErrorCode::DimensionMismatch, "family " + std::string(family) + " takes " + std::to_string(arity) + " coordinates");
  if (all_zero(point)) throw Error(ErrorCode::UndefinedAtPoint, "(0:...:0) is not a projective point");
  ProjectivePoint out = arity == 3 ? d5_map(which, point) : d6_map(which, point);
  if (all_zero(out)) throw Error(ErrorCode::UndefinedAtPoint, "image vanishes identically");
  return out;
}

bool projective_equal(const ProjectivePoint& u, const ProjectivePoint& v) {
  if (u.size() != v.size()) return false;
  if (all_zero(u) || all_zero(v)) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return true;
}

std::string to_string(const ProjectivePoint& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ':';
    out += to_string(p[i]);
  }
  return out;
}

ProjectivePoint parse_projective(std::string_view text) {
  ProjectivePoint out;
  std::size_t start = 0;
  for (;;) {
    const auto colon = text.find(':', start);
    out.push_back(parse_rational(text.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start)));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  return out;
}

} // namespace liemod
