#pragma once

#include "toriclab/fan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toriclab {

/// Integer matrix between lattices, target rank x source rank.
struct LatticeMap {
  IntMatrix matrix;
  std::string name;

  std::size_t source_rank() const { return matrix.cols(); }
  std::size_t target_rank() const { return matrix.rows(); }
};

/// Raised when a fan does not admit the quotient presentation built from its
/// Cartier divisors.
class NotDivisorialError : public Error {
 public:
  using Error::Error;
};

struct CoxLift {
  Fan lifted;  // rays e_1..e_d in Z^d, same maximal index sets
  LatticeMap q;  // e_i -> v_i
  std::vector<IntVector> kernel_basis;  // ker(q), defines the acting group
  /// Dimension of the complement of the lifted toric variety in affine
  /// d-space, or nullopt when the complement is empty.
  std::optional<std::size_t> complement_dimension;
};

/// Throws InputError on degenerate fans.
CoxLift cox_lift(const Fan& f);

struct QuasiaffineReport {
  Cone support;  // cone generated by all rays
  bool pointed = false;
  std::vector<bool> cone_is_face;  // per maximal cone

  bool ok() const;
};

/// Checks that every maximal cone is a face of one pointed cone, i.e. the fan
/// is a subfan of the face fan of a single pointed cone.
QuasiaffineReport check_quasiaffine(const Fan& f);

struct KajiwaraChecks {
  bool cartier_rank_positive = false;
  bool image_pointed = false;
  bool columns_extremal = false;  // each image of e_j spans its own extremal ray
  std::vector<bool> cone_is_face;
  std::vector<bool> dimension_preserved;
  std::string failure;

  bool ok() const { return failure.empty(); }
};

struct KajiwaraPresentation {
  CartierLattice cartier;
  LatticeMap q1;  // r x d; row k is the k-th Cartier basis element
  std::vector<IntVector> kernel_basis;  // ker(q1)
  std::optional<Fan> hat;  // images of the lifted cones in Z^r
  KajiwaraChecks checks;
  /// Index of the Cartier lattice in its saturation; > 1 means invariance
  /// under the kernel and membership in the row lattice can differ.
  Integer saturation_index = 1;
};

/// Builds the presentation and records every check without throwing on a
/// failed check.
KajiwaraPresentation kajiwara_data(const Fan& f);

/// As kajiwara_data, but throws NotDivisorialError if a check fails.
KajiwaraPresentation kajiwara_presentation(const Fan& f);

struct DistinguishedPoint {
  IntVector coordinates;  // 0 on the rays of the cone, 1 elsewhere
  std::size_t cone = 0;
};

/// One point per maximal cone of a Cox-lifted fan.
std::vector<DistinguishedPoint> distinguished_points(const Fan& lifted);

struct QuotientDiagram {
  LatticeMap map;
  std::vector<IntVector> kernel_basis;
  bool cones_injective = false;
  bool image_is_target = false;
  bool bijective_on_cones = false;
  /// image_match[s] = target cone equal to p(sigma_s), if any.
  std::vector<std::optional<std::size_t>> image_match;
  std::vector<std::size_t> source_dims;
  std::vector<std::size_t> image_dims;
  std::optional<std::size_t> first_failing_cone;
  std::string failure;

  bool geometric_quotient() const {
    return cones_injective && image_is_target && bijective_on_cones;
  }
};

QuotientDiagram check_geometric_quotient(const Fan& source, const LatticeMap& p,
                                         const Fan& target);

/// Fan of the images of the maximal cones. Throws InputError if p is not
/// injective on some maximal cone or the images do not form a fan.
Fan image_fan(const LatticeMap& p, const Fan& source);

}  // namespace toriclab
