#pragma once

#include "liemod/cochain.hpp"
#include "liemod/cohomology.hpp"
#include "liemod/series.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liemod {

/// delta: 2-cocycles projecting to a basis of H^2; beta: basis of B^3;
/// alpha: 3-cocycles projecting to a basis of H^3; tau: completes alpha, beta
/// to a basis of C^3; gamma: D(gamma^i) = beta^i / 2.
struct Prebases {
  int dim = 0;
  std::vector<RationalCochain> delta, alpha, beta, tau, gamma;
};

/// Deterministic prebases (echelon choices under the fixed basis order).
/// Throws Error(JacobiFails).
Prebases h2_prebasis(const RationalCochain& d);

/// The names t1..tm used for deformation parameters.
std::vector<std::string> deformation_parameters(std::size_t m);

/// d + sum delta^i t_i, as a cochain over Q(t1..tm).  Throws Error(JacobiFails).
ScalarCochain infinitesimal(const RationalCochain& d);
ScalarCochain infinitesimal(const RationalCochain& d, const Prebases& pb);

struct IdealCheck {
  enum class Status { Holds, Fails, Inconclusive };
  int degree = 0;
  Status status = Status::Holds;
};

struct VersalResult {
  Prebases prebases;
  int order = 0;
  std::vector<std::string> t;
  std::vector<RationalSeries> x;          // one per gamma
  std::vector<RationalSeries> relations;  // r_i, one per alpha
  std::vector<RationalSeries> obstructions_tau;  // u_i, one per tau
  std::vector<RationalSeries> residual_beta;     // s_i after solving, zero through `order`
  std::vector<IdealCheck> ideal;

  /// d + sum delta^i t_i + sum gamma^i x_i, coefficients polynomial in t.
  ScalarCochain deformed(const RationalCochain& d) const;
  std::string to_string() const;
};

/// Truncated versal deformation.  Throws Error(OrderTooSmall) for order < 2,
/// Error(JacobiFails).
VersalResult versal(const RationalCochain& d, int order);

/// Coordinates of a 3-cochain in the basis alpha, beta, tau (in that order).
RationalVector c3_coordinates(const Prebases& pb, const RationalCochain& w);

/// True iff transform(family, G) equals target identically in all parameters.
/// Throws Error(SingularMatrix) when det G vanishes identically.
bool verify_parametric_iso(const ScalarCochain& family, const ScalarCochain& target, const ScalarMatrix& g);

struct WitnessResult {
  enum class Status { Found, InvariantMismatch, BudgetExhausted };
  Status status = Status::BudgetExhausted;
  std::optional<RationalMatrix> witness;
  int trials = 0;
  std::string detail;
};

const char* to_string(WitnessResult::Status s);

/// Searches G with transform(d1, G) == d2.  Invariants are compared first;
/// BudgetExhausted is inconclusive, not a proof of non-isomorphism.
WitnessResult iso_witness_search(const RationalCochain& d1, const RationalCochain& d2, int budget = 200,
                                 std::uint64_t seed = 0);

} // namespace liemod
