#include "toriclab/quotients.hpp"

#include "toriclab/lattice.hpp"

#include <algorithm>

namespace toriclab {

namespace {

bool contained_in_some_cone(const Fan& f, const IndexSet& s) {
  for (const auto& c : f.max_cones())
    if (std::includes(c.begin(), c.end(), s.begin(), s.end())) return true;
  return false;
}

// Smallest subset of rays not contained in a maximal cone (size only).
std::optional<std::size_t> smallest_nonface(const Fan& f) {
  const std::size_t d = f.ray_count();
  for (std::size_t k = 1; k <= d; ++k) {
    std::vector<bool> pick(d, false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(k), pick.end(), true);
    do {
      IndexSet s;
      for (std::size_t i = 0; i < d; ++i)
        if (pick[i]) s.push_back(i);
      if (!contained_in_some_cone(f, s)) return k;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

bool injective_on(const IntMatrix& p, const IntMatrix& cone_rays) {
  return rank(cone_rays * p.transpose()) == rank(cone_rays);
}

}  // namespace

CoxLift cox_lift(const Fan& f) {
  if (!is_nondegenerate(f)) throw InputError("cox_lift: fan is degenerate");
  const std::size_t d = f.ray_count();
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < d; ++i) {
    IntVector e(d, Integer(0));
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  CoxLift out{Fan(d, basis, f.max_cones(), f.name().empty() ? "" : f.name() + "-coxlift"),
              LatticeMap{f.ray_matrix().transpose(), "Q"},
              {},
              std::nullopt};
  out.kernel_basis = rational_kernel_basis(out.q.matrix);
  if (auto k = smallest_nonface(f)) out.complement_dimension = d - *k;
  return out;
}

bool QuasiaffineReport::ok() const {
  return pointed && std::all_of(cone_is_face.begin(), cone_is_face.end(), [](bool b) { return b; });
}

QuasiaffineReport check_quasiaffine(const Fan& f) {
  QuasiaffineReport rep{Cone(f.rank(), f.rays()), false, {}};
  rep.pointed = rep.support.is_pointed();
  for (std::size_t s = 0; s < f.max_cones().size(); ++s)
    rep.cone_is_face.push_back(rep.pointed && is_face(f.cone(s), rep.support));
  return rep;
}

KajiwaraPresentation kajiwara_data(const Fan& f) {
  if (!is_nondegenerate(f)) throw InputError("kajiwara: fan is degenerate");
  KajiwaraPresentation out;
  out.cartier = cartier_lattice(f);
  out.q1 = LatticeMap{out.cartier.basis, "Q1"};
  out.kernel_basis = rational_kernel_basis(out.q1.matrix);
  out.saturation_index = saturation_index(out.cartier.basis);
  KajiwaraChecks& ch = out.checks;
  const std::size_t r = out.cartier.rank();
  const std::size_t d = f.ray_count();

  ch.cartier_rank_positive = r > 0;
  if (!ch.cartier_rank_positive) {
    ch.failure = "Cartier lattice is zero";
    return out;
  }
  std::vector<IntVector> columns;
  for (std::size_t j = 0; j < d; ++j) columns.push_back(out.q1.matrix.column(j));
  const Cone image(r, columns);
  ch.image_pointed = image.is_pointed();

  const auto extremal = ch.image_pointed ? image.extremal_generators() : std::vector<IntVector>{};
  std::vector<IntVector> prim;
  for (const auto& c : columns) prim.push_back(primitive(std::span<const Integer>(c)));
  ch.columns_extremal = ch.image_pointed;
  for (std::size_t j = 0; j < d && ch.columns_extremal; ++j) {
    if (is_zero(std::span<const Integer>(prim[j])) ||
        std::find(extremal.begin(), extremal.end(), prim[j]) == extremal.end() ||
        std::count(prim.begin(), prim.end(), prim[j]) != 1)
      ch.columns_extremal = false;
  }

  for (std::size_t s = 0; s < f.max_cones().size(); ++s) {
    std::vector<IntVector> gens;
    for (auto j : f.max_cones()[s]) gens.push_back(columns[j]);
    const Cone hat_cone(r, gens);
    ch.cone_is_face.push_back(ch.image_pointed && is_face(hat_cone, image));
    ch.dimension_preserved.push_back(hat_cone.dimension() == f.cone(s).dimension());
  }

  if (!ch.image_pointed) {
    ch.failure = "image cone is not pointed";
  } else if (!ch.columns_extremal) {
    ch.failure = "images of the basis vectors do not span distinct extremal rays";
  } else {
    for (std::size_t s = 0; s < f.max_cones().size() && ch.failure.empty(); ++s) {
      if (!ch.cone_is_face[s])
        ch.failure = "image of lifted cone " + std::to_string(s + 1) + " is not a face";
      else if (!ch.dimension_preserved[s])
        ch.failure = "image of lifted cone " + std::to_string(s + 1) + " drops dimension";
    }
  }
  if (ch.ok()) {
    out.hat = Fan(r, prim, f.max_cones(), f.name().empty() ? "" : f.name() + "-kajiwara");
  }
  return out;
}

KajiwaraPresentation kajiwara_presentation(const Fan& f) {
  auto out = kajiwara_data(f);
  if (!out.checks.ok())
    throw NotDivisorialError("fan not divisorial at presentation level: " + out.checks.failure);
  return out;
}

std::vector<DistinguishedPoint> distinguished_points(const Fan& lifted) {
  std::vector<DistinguishedPoint> out;
  for (std::size_t s = 0; s < lifted.max_cones().size(); ++s) {
    IntVector x(lifted.ray_count(), Integer(1));
    for (auto j : lifted.max_cones()[s]) x[j] = 0;
    out.push_back({std::move(x), s});
  }
  return out;
}

QuotientDiagram check_geometric_quotient(const Fan& source, const LatticeMap& p,
                                         const Fan& target) {
  if (p.source_rank() != source.rank() || p.target_rank() != target.rank())
    throw InputError("quotient check: map shape does not match the fans");
  QuotientDiagram q;
  q.map = p;
  q.kernel_basis = rational_kernel_basis(p.matrix);
  const std::size_t k = source.max_cones().size();

  q.cones_injective = true;
  for (std::size_t s = 0; s < k; ++s) {
    const IntMatrix rays = source.cone_ray_matrix(s);
    q.source_dims.push_back(rank(rays));
    q.image_dims.push_back(rank(rays * p.matrix.transpose()));
    if (q.cones_injective && !injective_on(p.matrix, rays)) {
      q.cones_injective = false;
      q.first_failing_cone = s;
      q.failure = "map is not injective on source cone " + std::to_string(s + 1);
    }
  }

  std::vector<std::size_t> hits(target.max_cones().size(), 0);
  q.image_is_target = true;
  for (std::size_t s = 0; s < k; ++s) {
    const Cone img = image_cone(p.matrix, source.cone(s));
    std::optional<std::size_t> match;
    for (std::size_t t = 0; t < target.max_cones().size() && !match; ++t)
      if (img == target.cone(t)) match = t;
    q.image_match.push_back(match);
    if (match) {
      ++hits[*match];
    } else if (q.image_is_target) {
      q.image_is_target = false;
      if (!q.first_failing_cone) q.first_failing_cone = s;
      if (q.failure.empty())
        q.failure = "image of source cone " + std::to_string(s + 1) + " is not a maximal target cone";
    }
  }
  q.bijective_on_cones = k == target.max_cones().size() &&
                         std::all_of(hits.begin(), hits.end(), [](std::size_t h) { return h == 1; });
  if (!q.bijective_on_cones && q.failure.empty())
    q.failure = "images do not match the target cones bijectively";
  return q;
}

Fan image_fan(const LatticeMap& p, const Fan& source) {
  if (p.source_rank() != source.rank()) throw InputError("image_fan: shape mismatch");
  for (std::size_t s = 0; s < source.max_cones().size(); ++s)
    if (!injective_on(p.matrix, source.cone_ray_matrix(s)))
      throw InputError("image_fan: map is not injective on cone " + std::to_string(s + 1));
  std::vector<IntVector> rays;
  std::vector<std::size_t> index(source.ray_count());
  for (std::size_t i = 0; i < source.ray_count(); ++i) {
    IntVector img = p.matrix * source.ray(i);
    img = primitive(std::span<const Integer>(img));
    auto it = std::find(rays.begin(), rays.end(), img);
    index[i] = static_cast<std::size_t>(it - rays.begin());
    if (it == rays.end()) rays.push_back(std::move(img));
  }
  std::vector<IndexSet> cones;
  for (const auto& c : source.max_cones()) {
    IndexSet mapped;
    for (auto i : c) mapped.push_back(index[i]);
    cones.push_back(std::move(mapped));
  }
  Fan out(p.target_rank(), rays, cones, source.name().empty() ? "" : source.name() + "-image");
  const auto rep = validate_fan(out);
  if (!rep.valid())
    throw InputError("image_fan: images do not form a fan: " + rep.violations.front().message);
  return out;
}

}  // namespace toriclab
