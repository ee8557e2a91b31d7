#pragma once

#include "toriclab/lp.hpp"
#include "toriclab/quotients.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toriclab {

/// Everything the monomial criterion needs for one fan: the Cox lift (with
/// ker Q defining the grading group), the Cartier presentation (with ker Q1
/// defining the invariance group) and the cone subsets to examine.
struct KDivInstance {
  Fan fan;
  std::size_t k = 1;
  CoxLift cox;
  KajiwaraPresentation kajiwara;
  std::vector<IndexSet> subsets;  // maximal-cone subsets of size min(k, #cones)
  /// Exponent of the torsion of the saturation of the principal divisors
  /// modulo the principal divisors; scaling by it makes any rational weight
  /// relation exact.
  Integer weight_torsion_exponent = 1;
};

/// Throws InputError on degenerate fans or k == 0.
KDivInstance make_kdiv_instance(const Fan& f, std::size_t k);

/// Exponent vectors u^(i) of monomials f_i, one per selected cone.
struct MonomialWitness {
  IndexSet cones;
  std::vector<IntVector> exponents;
};

struct InfeasibilityCertificate {
  RatVector multipliers;  // over subset_system(...).stacked()
  /// Integral weights of the positive combination of exponents that the
  /// multipliers force to vanish, one entry per variable.
  IntVector combination;
  std::string relation;
};

struct SubsetResult {
  IndexSet cones;
  bool feasible = false;
  std::optional<MonomialWitness> witness;
  std::optional<InfeasibilityCertificate> certificate;
};

/// Homogeneous system in the exponents (u^(1), .., u^(s)) stacked blockwise:
///   equalities  u^(i)_j = 0 for rays j of sigma_i,
///               <u^(i), w> = 0 for w in ker Q1,
///               <u^(i) - u^(1), w> = 0 for w in ker Q (i > 1);
///   strict      u^(i)_j > 0 for rays j outside sigma_i.
LinearSystem subset_system(const KDivInstance& inst, const IndexSet& subset);

SubsetResult subset_feasibility(const KDivInstance& inst, const IndexSet& subset);

/// Solver-independent check: support pattern, invariance under ker Q1 and
/// exact lattice membership of all pairwise differences in the image of Q^T.
bool verify_monomial_witness(const KDivInstance& inst, const MonomialWitness& w);

bool verify_kdiv_certificate(const KDivInstance& inst, const IndexSet& subset,
                             const InfeasibilityCertificate& c);

/// Certificate obtained by contracting the weight condition with a single
/// vector of ker Q, as in a hand derivation. Returns nullopt if that single
/// contraction does not already produce a contradiction.
std::optional<InfeasibilityCertificate> contracted_certificate(
    const KDivInstance& inst, const IndexSet& subset, std::span<const Integer> kernel_vector);

/// "2a1 + a9 = -3b4 - 2b8" style rendering of a combination; block i uses the
/// i-th letter, rays are 1-based.
std::string format_relation(const IntVector& combination, std::size_t rays,
                            std::size_t blocks);

/// Effective divisors sum u_j D_j for each monomial of a witness.
std::vector<std::string> witness_divisors(const MonomialWitness& w);

struct KDivReport {
  std::size_t k = 1;
  std::size_t subset_size = 1;
  bool presentation_ok = true;
  std::string presentation_failure;
  /// The Cartier lattice is not saturated, so invariance by orthogonality and
  /// by row-lattice membership may differ.
  bool invariance_notions_may_differ = false;
  bool k_divisorial = false;
  std::vector<SubsetResult> subsets;  // sorted by cone indices
};

KDivReport k_divisoriality(const Fan& f, std::size_t k);

/// k-divisoriality with k = number of maximal cones.
bool quasiprojectivity_via_corollary(const Fan& f);

}  // namespace toriclab
