#pragma once

#include "toriclab/matrix.hpp"

#include <optional>
#include <string>

namespace toriclab {

/// A positively homogeneous linear system in x ∈ Q^n:
///   equalities x = 0,  nonstrict x >= 0,  strict x > 0  (row-wise).
/// Every block has `variables` columns; any block may have zero rows.
struct LinearSystem {
  std::size_t variables = 0;
  RatMatrix equalities;
  RatMatrix nonstrict;
  RatMatrix strict;

  explicit LinearSystem(std::size_t n = 0)
      : variables(n), equalities(0, n), nonstrict(0, n), strict(0, n) {}

  void add_equality(std::span<const Rational> row);
  void add_nonstrict(std::span<const Rational> row);
  void add_strict(std::span<const Rational> row);

  std::size_t constraint_count() const {
    return equalities.rows() + nonstrict.rows() + strict.rows();
  }
  /// All rows stacked as [equalities; nonstrict; strict].
  RatMatrix stacked() const;
};

enum class Feasibility { feasible, infeasible };

/// Result of a strict feasibility query.
///
/// A witness satisfies every equality exactly and every strict row with
/// value >= 1 (the system is homogeneous, so this is a normalisation).
/// A certificate holds one multiplier per row of `stacked()`; multipliers on
/// nonstrict and strict rows are >= 0, those on strict rows are not all zero,
/// and the combination of all rows is the zero functional. Evaluated at any
/// hypothetical solution it reads 0 = (positive quantity), a contradiction.
struct FeasibilityOutcome {
  Feasibility status = Feasibility::infeasible;
  std::optional<RatVector> witness;
  std::optional<RatVector> certificate;

  bool feasible() const { return status == Feasibility::feasible; }
};

FeasibilityOutcome strict_lp_feasibility(const LinearSystem& system);

/// Convenience overload: equalities and strict rows only.
FeasibilityOutcome strict_lp_feasibility(const RatMatrix& equalities,
                                         const RatMatrix& strict);

/// Direct substitution check of a witness: equalities == 0, nonstrict >= 0,
/// strict > 0.
bool verify_witness(const LinearSystem& system, std::span<const Rational> x);

/// One matrix product: checks the sign pattern of the multipliers and that
/// they combine the rows to zero.
bool verify_certificate(const LinearSystem& system,
                        std::span<const Rational> multipliers);

/// Some x >= 0 with a x = b, or nullopt. Exact phase-one simplex with
/// Bland's rule.
std::optional<RatVector> nonnegative_solution(const RatMatrix& a,
                                              std::span<const Rational> b);

}  // namespace toriclab
