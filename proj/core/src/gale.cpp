#include "toriclab/gale.hpp"

#include "toriclab/lattice.hpp"

#include <algorithm>

namespace toriclab {

GaleData gale_transform(const Fan& f) {
  if (!is_nondegenerate(f))
    throw InputError("gale_transform: rays do not span the ambient space");
  GaleData g;
  g.rays = f.ray_matrix();
  const auto relations = rational_kernel_basis(g.rays.transpose());
  g.gale = IntMatrix(0, f.ray_count());
  for (const auto& r : relations) g.gale.append_row(r);
  return g;
}

Cone coface(const GaleData& g, const IndexSet& cone_rays) {
  for (auto i : cone_rays)
    if (i >= g.gale.cols()) throw InputError("coface: ray index out of range");
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < g.gale.cols(); ++i) {
    if (std::find(cone_rays.begin(), cone_rays.end(), i) != cone_rays.end()) continue;
    gens.push_back(g.vector(i));
  }
  return Cone(g.dimension(), gens);
}

std::string to_string(ProjectivityMethod m) {
  return m == ProjectivityMethod::shephard ? "shephard" : "support-function";
}

namespace {

void check_preconditions(const Fan& f, ProjectivityVerdict& v) {
  if (!is_complete(f)) v.warnings.push_back("fan is not complete; the criterion assumes completeness");
}

LinearSystem shephard_system(const Fan& f, const GaleData& g) {
  LinearSystem sys(g.dimension());
  for (const auto& sigma : f.max_cones()) {
    const Cone c = coface(g, sigma);
    const auto& d = c.description();
    for (const auto& e : d.equations) sys.add_equality(to_rational(std::span<const Integer>(e)));
    for (const auto& h : d.facets) sys.add_strict(to_rational(std::span<const Integer>(h)));
  }
  return sys;
}

LinearSystem support_system(const Fan& f) {
  const std::size_t d = f.ray_count();
  const std::size_t n = f.rank();
  const auto& mc = f.max_cones();
  LinearSystem sys(d + n * mc.size());
  for (std::size_t s = 0; s < mc.size(); ++s) {
    for (std::size_t j = 0; j < d; ++j) {
      RatVector row(sys.variables, Rational(0));
      row[j] = -1;
      for (std::size_t k = 0; k < n; ++k) row[d + s * n + k] = Rational(f.ray(j)[k]);
      if (std::binary_search(mc[s].begin(), mc[s].end(), j))
        sys.add_equality(row);
      else
        sys.add_strict(row);
    }
  }
  return sys;
}

void fill_from_outcome(ProjectivityVerdict& v, const FeasibilityOutcome& out) {
  v.strongly_polytopal = out.feasible();
  if (out.feasible()) {
    v.witness = primitive(std::span<const Rational>(*out.witness));
  } else {
    v.certificate = out.certificate;
  }
}

}  // namespace

ProjectivityVerdict shephard_test(const Fan& f) {
  ProjectivityVerdict v;
  v.method = ProjectivityMethod::shephard;
  check_preconditions(f, v);
  const GaleData g = gale_transform(f);
  v.system = shephard_system(f, g);
  fill_from_outcome(v, strict_lp_feasibility(v.system));
  return v;
}

ProjectivityVerdict support_function_test(const Fan& f) {
  ProjectivityVerdict v;
  v.method = ProjectivityMethod::support_function;
  check_preconditions(f, v);
  v.system = support_system(f);
  fill_from_outcome(v, strict_lp_feasibility(v.system));
  return v;
}

bool verify_verdict(const Fan& f, const ProjectivityVerdict& v) {
  if (v.strongly_polytopal) {
    if (!v.witness || v.certificate) return false;
    const IntVector& w = *v.witness;
    if (v.method == ProjectivityMethod::shephard) {
      const GaleData g = gale_transform(f);
      if (w.size() != g.dimension()) return false;
      const RatVector x = to_rational(std::span<const Integer>(w));
      for (const auto& sigma : f.max_cones())
        if (!coface(g, sigma).in_relative_interior(x)) return false;
      return true;
    }
    const std::size_t d = f.ray_count();
    const std::size_t n = f.rank();
    if (w.size() != d + n * f.max_cones().size()) return false;
    for (std::size_t s = 0; s < f.max_cones().size(); ++s) {
      std::span<const Integer> m(w.data() + d + s * n, n);
      for (std::size_t j = 0; j < d; ++j) {
        const Integer value = dot(m, std::span<const Integer>(f.ray(j)));
        const bool inside = std::binary_search(f.max_cones()[s].begin(), f.max_cones()[s].end(), j);
        if (inside && value != w[j]) return false;
        if (!inside && value <= w[j]) return false;
      }
    }
    return true;
  }
  if (!v.certificate || v.witness) return false;
  const LinearSystem fresh = v.method == ProjectivityMethod::shephard
                                 ? shephard_system(f, gale_transform(f))
                                 : support_system(f);
  return verify_certificate(fresh, *v.certificate);
}

}  // namespace toriclab
