#pragma once

#include "toriclab/matrix.hpp"

#include <memory>
#include <vector>

namespace toriclab {

/// {x : A x >= 0} as lineality space plus extreme rays of the pointed part.
struct RayDecomposition {
  std::vector<IntVector> lineality;  // basis of ker(A)
  std::vector<IntVector> rays;       // primitive, pairwise non-proportional
};

/// Double description method over the integers.
RayDecomposition extreme_rays(const IntMatrix& constraints);

/// H-description of a cone. A point x lies in the cone iff
/// <e, x> = 0 for every equation e and <h, x> >= 0 for every facet normal h.
/// Facet normals are primitive integer vectors inside the linear span of the
/// cone, so they are canonical.
struct ConeDescription {
  std::vector<IntVector> span_basis;
  std::vector<IntVector> equations;   // basis of the orthogonal complement of the span
  std::vector<IntVector> facets;
  std::vector<IntVector> lineality;   // basis of cone ∩ (-cone)
};

/// Rational polyhedral cone given by generators in Q^n. Immutable; the
/// H-description is computed on first use and shared between copies.
class Cone {
 public:
  explicit Cone(std::size_t ambient_rank = 0);
  /// Zero generators are dropped; the rest are made primitive and
  /// deduplicated up to positive scaling.
  Cone(std::size_t ambient_rank, const std::vector<IntVector>& generators);

  /// V-description of {x : E x = 0, F x >= 0}.
  static Cone from_constraints(std::size_t ambient_rank, const IntMatrix& equations,
                               const IntMatrix& inequalities);

  std::size_t ambient_rank() const { return ambient_rank_; }
  const std::vector<IntVector>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }

  const ConeDescription& description() const;
  std::size_t dimension() const { return description().span_basis.size(); }
  bool is_pointed() const { return description().lineality.empty(); }

  bool contains(std::span<const Integer> x) const;
  bool contains(std::span<const Rational> x) const;
  bool contains(const Cone& other) const;
  bool in_relative_interior(std::span<const Rational> x) const;

  /// Generators spanning extremal rays (pointed cones only; empty otherwise).
  std::vector<IntVector> extremal_generators() const;

  /// Set equality (mutual containment).
  friend bool operator==(const Cone& a, const Cone& b);

 private:
  struct Cache;
  std::size_t ambient_rank_ = 0;
  std::vector<IntVector> generators_;
  std::shared_ptr<Cache> cache_;
};

const ConeDescription& facet_description(const Cone& c);
bool is_pointed(const Cone& c);
/// True iff f = c ∩ m^⊥ for some m in the dual of c.
bool is_face(const Cone& f, const Cone& c);
bool in_relative_interior(std::span<const Rational> x, const Cone& c);
Cone intersect(const Cone& a, const Cone& b);
/// Cone generated by the images of the generators.
Cone image_cone(const IntMatrix& m, const Cone& c);

}  // namespace toriclab
