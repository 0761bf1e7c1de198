#pragma once

#include "liemod/cochain.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace liemod {

using BettiVector = std::vector<std::size_t>;

/// A named point or subfamily of a family: parameter -> value expression.
/// Values may mention the remaining parameters ("r=-p-q"); unassigned
/// parameters stay free and are sampled generically.
struct SpecialPoint {
  std::string name;
  std::map<std::string, Scalar> values;
  std::optional<BettiVector> betti;

  friend bool operator==(const SpecialPoint&, const SpecialPoint&) = default;
};

struct AlgebraDef {
  std::string id;  // "5.d5"
  int dim = 0;
  std::vector<std::string> params;
  ScalarCochain d;
  std::vector<Polynomial> avoid;
  std::vector<SpecialPoint> points;
  std::optional<BettiVector> expected_betti;
  std::optional<std::string> symmetry_group;  // "S4(p,q,r,s)", "S2(q,r)", "sigma-tau"
  bool projective = false;
  std::vector<std::string> notes;

  /// Structure at a point or on a subfamily; throws Error(DenominatorVanishes).
  ScalarCochain at(const SpecialPoint& point) const;
  /// Structure at a full rational assignment.
  RationalCochain at(const Assignment& values) const;
  /// Parameters left free by `point`.
  std::vector<std::string> free_params(const SpecialPoint& point) const;
  /// Avoid polynomials restricted to a subfamily (identically vanishing ones dropped).
  std::vector<Polynomial> avoid_on(const SpecialPoint& point) const;
  const SpecialPoint* find_point(std::string_view name) const;

  friend bool operator==(const AlgebraDef&, const AlgebraDef&) = default;
};

/// Parses the `.lie` format.  Errors: SyntaxError (with line/column),
/// Error(DuplicateTerm), Error(IndexOutOfRange).
AlgebraDef parse_lie(std::string_view text);
/// Canonical text; parse_lie(serialize(def)) == def for canonical definitions.
std::string serialize(const AlgebraDef& def);

/// Catalog entries for dim 3, 4, 5 in catalog order.
const std::vector<AlgebraDef>& catalog(int dim);
/// Rows of the nilpotent table, ids "nil.n1" .. "nil.n8".
const std::vector<AlgebraDef>& nilpotent_table();
/// Printed variants that were not adopted (most fail the Jacobi identity), kept for the record.
const std::vector<AlgebraDef>& quarantine();

/// Throws Error(UnknownId).  `id` is the short name ("d5"); dim 0 selects the nilpotent table.
const AlgebraDef& get(int dim, std::string_view id);

/// Distinct integers from [2, 97], one per free parameter, off every avoid
/// locus and every coefficient pole.  Throws Error(NoValidSample) after 1000 tries.
Assignment sample_generic(const AlgebraDef& def, std::uint64_t seed);
Assignment sample_generic(const AlgebraDef& def, const SpecialPoint& subfamily, std::uint64_t seed);

/// Resolves "catalog:5/d5", "catalog:5/d5@0:0:0" or "catalog:5/d5@2:3:7".
/// Also accepts a plain point "2:3:7" against the def's params.
struct CatalogRef {
  const AlgebraDef* def = nullptr;
  std::optional<SpecialPoint> point;
};
CatalogRef resolve_ref(std::string_view ref);
SpecialPoint point_from_label(const AlgebraDef& def, std::string_view label);

std::string betti_to_string(const BettiVector& b);
BettiVector parse_betti(std::string_view text);

} // namespace liemod
