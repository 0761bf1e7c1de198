#pragma once

#include "liemod/cochain.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace liemod {

/// n * C(n, k).  Throws Error(OutOfRange) unless 0 <= k <= n.
std::size_t cochain_dim(int n, int k);

enum class RankMode { ExactAtPoint, GenericProbabilistic, ExactSymbolic };

const char* to_string(RankMode mode);

struct CohomologyReport {
  int dim = 0;
  std::vector<std::size_t> betti;  // h^0..h^n
  RankMode mode = RankMode::ExactAtPoint;
  std::vector<std::size_t> ranks;  // rank of D_k : C^k -> C^{k+1}, k = 0..n-1
  // probabilistic evidence
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<Assignment> points;
  bool resampled = false;
  bool escalated = false;

  long euler() const;
  std::string betti_string() const;  // "(0,1,2,1,0,0)"
};

/// Exact ranks of a parameter-free structure.  Throws Error(JacobiFails).
CohomologyReport betti(const RationalCochain& d);

/// ExactAtPoint evaluates `d` at `at` (which must cover every parameter);
/// GenericProbabilistic samples `trials` points from [2, 10^6] off the `avoid`
/// locus and keeps the largest rank of each D_k; ExactSymbolic runs Bareiss
/// over the polynomial ring.  Throws Error(JacobiFails), Error(NoValidSample).
CohomologyReport betti(const ScalarCochain& d, RankMode mode, std::uint64_t seed = 0,
                       const std::vector<Polynomial>& avoid = {}, const Assignment& at = {},
                       int trials = 2);

/// Generic Betti numbers cross-checked with two seeds; a disagreement triggers
/// one resample, a second one escalates to ExactSymbolic.
CohomologyReport betti_checked(const ScalarCochain& d, std::uint64_t seed,
                               const std::vector<Polynomial>& avoid = {});

/// dim { v : d(v, x) = 0 for all x }.  Throws Error(JacobiFails).
std::size_t center(const RationalCochain& d);

struct InvariantVector {
  std::size_t center_dim = 0;
  std::vector<std::size_t> derived_series;       // dims of L, [L,L], ...
  std::vector<std::size_t> lower_central_series; // dims of L, [L,L], [L,[L,L]], ...
  bool is_solvable = false;
  bool is_nilpotent = false;
  std::vector<std::size_t> betti;

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
  std::string to_string() const;
};

/// Throws Error(JacobiFails).
InvariantVector series_invariants(const RationalCochain& d);

} // namespace liemod
