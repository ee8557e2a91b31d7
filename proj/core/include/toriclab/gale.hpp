#pragma once

#include "toriclab/fan.hpp"
#include "toriclab/lp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toriclab {

/// Linear Gale transform of the ray configuration of a fan.
struct GaleData {
  IntMatrix rays;  // R, d x n
  IntMatrix gale;  // B, (d - n) x d, rows a lattice basis of the relations of R in HNF

  std::size_t dimension() const { return gale.rows(); }
  /// The i-th Gale vector (column i of B).
  IntVector vector(std::size_t i) const { return gale.column(i); }
};

/// Throws InputError when the rays do not span Q^n.
GaleData gale_transform(const Fan& f);

/// Cone generated by the Gale vectors of the rays outside `cone_rays`.
Cone coface(const GaleData& g, const IndexSet& cone_rays);

enum class ProjectivityMethod { shephard, support_function };

std::string to_string(ProjectivityMethod m);

struct ProjectivityVerdict {
  ProjectivityMethod method = ProjectivityMethod::shephard;
  bool strongly_polytopal = false;
  /// Shephard: an integral point in the relative interior of every coface.
  /// Support function: (c_1..c_d, m_1, .., m_k) flattened, integral.
  std::optional<IntVector> witness;
  /// Farkas multipliers over system.stacked() when not polytopal.
  std::optional<RatVector> certificate;
  /// The exact system that was decided.
  LinearSystem system;
  std::vector<std::string> warnings;
};

/// Shephard's criterion: the relative interiors of the cofaces of all
/// maximal cones have a common point.
ProjectivityVerdict shephard_test(const Fan& f);

/// Existence of a strictly convex piecewise linear support function:
/// <m_s, v_i> = c_i for v_i in sigma_s and <m_s, v_j> > c_j otherwise.
ProjectivityVerdict support_function_test(const Fan& f);

/// Re-checks a verdict from the fan alone. Shephard witnesses are checked
/// against each coface's facet description, support-function witnesses by
/// evaluating the functionals on the rays, certificates by one matrix product
/// against a freshly built system.
bool verify_verdict(const Fan& f, const ProjectivityVerdict& v);

}  // namespace toriclab
