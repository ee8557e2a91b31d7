#pragma once

#include "toriclab/cone.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toriclab {

using IndexSet = std::vector<std::size_t>;

/// A fan in Z^n given by primitive rays and its maximal cones as index sets
/// into the ray list (0-based, each sorted). Construction checks shapes and
/// indices only; geometric axioms are checked by validate_fan.
class Fan {
 public:
  Fan() = default;
  /// Rays are made primitive (see ray_scaling()); a ray that becomes equal
  /// to an earlier one is rejected.
  Fan(std::size_t rank, std::vector<IntVector> rays, std::vector<IndexSet> max_cones,
      std::string name = {});

  std::size_t rank() const { return rank_; }
  std::size_t ray_count() const { return rays_.size(); }
  const std::vector<IntVector>& rays() const { return rays_; }
  const IntVector& ray(std::size_t i) const { return rays_.at(i); }
  const std::vector<IndexSet>& max_cones() const { return max_cones_; }
  const std::string& name() const { return name_; }
  /// Factor each input ray was divided by to make it primitive.
  const std::vector<Integer>& ray_scaling() const { return scaling_; }

  /// The i-th maximal cone as a Cone.
  const Cone& cone(std::size_t i) const { return cones_.at(i); }
  /// d x n matrix whose rows are the rays.
  IntMatrix ray_matrix() const;
  /// |sigma| x n matrix of the rays of the i-th maximal cone.
  IntMatrix cone_ray_matrix(std::size_t i) const;

 private:
  std::size_t rank_ = 0;
  std::vector<IntVector> rays_;
  std::vector<IndexSet> max_cones_;
  std::string name_;
  std::vector<Integer> scaling_;
  std::vector<Cone> cones_;
};

enum class ViolationKind {
  not_pointed,
  ray_not_extremal,
  foreign_ray_inside,
  unused_ray,
  duplicate_cone,
  cone_is_face_of_other,
  intersection_not_face,
};

std::string to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> cones;  // offending maximal cones (0-based)
  std::optional<std::size_t> ray;
  std::string message;  // 1-based numbering, for humans
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

ValidationReport validate_fan(const Fan& f);

bool is_simplicial(const Fan& f);
/// Facet-pairing criterion: maximal cones full-dimensional, each facet shared
/// by exactly two maximal cones, and the adjacency graph connected.
bool is_complete(const Fan& f);
/// Rays span Q^n.
bool is_nondegenerate(const Fan& f);

/// Ray index sets of the facets of a full-dimensional maximal cone.
std::vector<IndexSet> facet_ray_sets(const Fan& f, std::size_t cone_index);

/// Lattice of invariant Cartier divisors sum a_i D_i, where on every maximal
/// cone sigma some m_sigma in Z^n has <m_sigma, v_i> = -a_i for v_i in sigma.
struct CartierLattice {
  IntMatrix basis;  // r x d, Hermite normal form
  /// witnesses[k][s] is m_sigma for basis row k on maximal cone s.
  std::vector<std::vector<IntVector>> witnesses;

  std::size_t rank() const { return basis.rows(); }
};

CartierLattice cartier_lattice(const Fan& f);

/// Checks whether sum a_i D_i is Cartier; on success fills the per-cone
/// witnesses if requested.
bool is_cartier(const Fan& f, std::span<const Integer> a,
                std::vector<IntVector>* witnesses = nullptr);

/// d x n matrix whose columns span the principal divisors (rows are rays).
IntMatrix principal_divisors(const Fan& f);

/// Same rank, same ray set (order-insensitive) and the same maximal cones
/// under the induced bijection of rays.
bool fans_equal(const Fan& a, const Fan& b);

}  // namespace toriclab
