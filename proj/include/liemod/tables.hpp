#pragma once

#include "liemod/catalog.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liemod {

struct TableRow {
  enum class Status { Match, Mismatch, NoExpectation };

  std::string id;
  std::string point;  // "generic", "-" for a fixed algebra, or the point label
  BettiVector computed;
  std::optional<BettiVector> expected;
  Status status = Status::NoExpectation;
  bool euler_ok = false;
  bool center_ok = false;
  std::optional<bool> expected_euler_ok;
  std::vector<Assignment> samples;  // points the row was computed at
  bool resampled = false;

  /// Mismatches are tolerated; only a self-inconsistent computed row fails.
  bool failed() const { return !euler_ok || !center_ok; }
};

const char* to_string(TableRow::Status s);

struct TableReport {
  int dim = 0;  // 0 for the nilpotent table
  std::uint64_t seed = 0;
  std::vector<TableRow> rows;

  std::size_t count(TableRow::Status s) const;
  bool consistent() const;
  /// Tab-separated, one header line.
  std::string to_tsv() const;
};

long alternating_sum(const BettiVector& b);

/// Seeds for the two sampled points of family rows (and the two fallbacks).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k);

/// Rows for one catalog entry: the generic or fixed row, then its special points.
/// Throws Error(NoValidSample) when sampling fails or samples keep disagreeing.
std::vector<TableRow> table_rows(const AlgebraDef& def, std::uint64_t seed);

/// dim in {3, 4, 5}, or 0 for the nilpotent table.
TableReport make_table(int dim, std::uint64_t seed = 0);

} // namespace liemod
