#include "toriclab/fan.hpp"

#include "toriclab/lattice.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace toriclab {

namespace {

std::string one_based(const IndexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i] + 1;
  os << '}';
  return os.str();
}

}  // namespace

Fan::Fan(std::size_t rank, std::vector<IntVector> rays, std::vector<IndexSet> max_cones,
         std::string name)
    : rank_(rank), max_cones_(std::move(max_cones)), name_(std::move(name)) {
  if (rank_ == 0) throw InputError("fan rank must be positive");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].size() != rank_)
      throw InputError("ray " + std::to_string(i + 1) + " has wrong length");
    if (is_zero(std::span<const Integer>(rays[i])))
      throw InputError("ray " + std::to_string(i + 1) + " is zero");
    scaling_.push_back(content(rays[i]));
    IntVector p = primitive(std::span<const Integer>(rays[i]));
    for (std::size_t j = 0; j < rays_.size(); ++j)
      if (rays_[j] == p)
        throw InputError("rays " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                         " coincide");
    rays_.push_back(std::move(p));
  }
  for (auto& c : max_cones_) {
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      throw InputError("maximal cone lists a ray twice");
    for (auto i : c)
      if (i >= rays_.size()) throw InputError("maximal cone index out of range");
  }
  cones_.reserve(max_cones_.size());
  for (const auto& c : max_cones_) {
    std::vector<IntVector> gens;
    for (auto i : c) gens.push_back(rays_[i]);
    cones_.emplace_back(rank_, gens);
  }
}

IntMatrix Fan::ray_matrix() const {
  IntMatrix m(0, rank_);
  for (const auto& r : rays_) m.append_row(r);
  return m;
}

IntMatrix Fan::cone_ray_matrix(std::size_t i) const {
  IntMatrix m(0, rank_);
  for (auto j : max_cones_.at(i)) m.append_row(rays_[j]);
  return m;
}

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::not_pointed: return "not_pointed";
    case ViolationKind::ray_not_extremal: return "ray_not_extremal";
    case ViolationKind::foreign_ray_inside: return "foreign_ray_inside";
    case ViolationKind::unused_ray: return "unused_ray";
    case ViolationKind::duplicate_cone: return "duplicate_cone";
    case ViolationKind::cone_is_face_of_other: return "cone_is_face_of_other";
    case ViolationKind::intersection_not_face: return "intersection_not_face";
  }
  return "unknown";
}

ValidationReport validate_fan(const Fan& f) {
  ValidationReport rep;
  auto add = [&](ViolationKind k, std::vector<std::size_t> cones, std::optional<std::size_t> ray,
                 std::string msg) {
    rep.violations.push_back({k, std::move(cones), ray, std::move(msg)});
  };
  const auto& mc = f.max_cones();

  std::vector<bool> used(f.ray_count(), false);
  for (std::size_t s = 0; s < mc.size(); ++s) {
    for (auto i : mc[s]) used[i] = true;
    const Cone& c = f.cone(s);
    const std::string name = "cone " + std::to_string(s + 1) + " " + one_based(mc[s]);
    if (!c.is_pointed()) {
      add(ViolationKind::not_pointed, {s}, std::nullopt, name + " is not pointed");
      continue;
    }
    const auto extremal = c.extremal_generators();
    for (auto i : mc[s])
      if (std::find(extremal.begin(), extremal.end(), f.ray(i)) == extremal.end())
        add(ViolationKind::ray_not_extremal, {s}, i,
            "ray " + std::to_string(i + 1) + " does not span an edge of " + name);
    for (std::size_t j = 0; j < f.ray_count(); ++j) {
      if (std::binary_search(mc[s].begin(), mc[s].end(), j)) continue;
      if (c.contains(std::span<const Integer>(f.ray(j))))
        add(ViolationKind::foreign_ray_inside, {s}, j,
            "ray " + std::to_string(j + 1) + " lies in " + name + " but is not one of its rays");
    }
  }
  for (std::size_t i = 0; i < f.ray_count(); ++i)
    if (!used[i])
      add(ViolationKind::unused_ray, {}, i,
          "ray " + std::to_string(i + 1) + " lies in no maximal cone");

  for (std::size_t a = 0; a < mc.size(); ++a) {
    for (std::size_t b = a + 1; b < mc.size(); ++b) {
      const std::string pair = "cones " + std::to_string(a + 1) + " and " + std::to_string(b + 1);
      if (mc[a] == mc[b]) {
        add(ViolationKind::duplicate_cone, {a, b}, std::nullopt, pair + " coincide");
        continue;
      }
      const Cone& ca = f.cone(a);
      const Cone& cb = f.cone(b);
      if (!ca.is_pointed() || !cb.is_pointed()) continue;
      if (is_face(ca, cb) || is_face(cb, ca)) {
        add(ViolationKind::cone_is_face_of_other, {a, b}, std::nullopt,
            pair + ": one is a face of the other");
        continue;
      }
      const Cone meet = intersect(ca, cb);
      if (!is_face(meet, ca) || !is_face(meet, cb))
        add(ViolationKind::intersection_not_face, {a, b}, std::nullopt,
            pair + " intersect in a set that is not a common face");
    }
  }
  return rep;
}

bool is_simplicial(const Fan& f) {
  for (std::size_t s = 0; s < f.max_cones().size(); ++s)
    if (rank(f.cone_ray_matrix(s)) != f.max_cones()[s].size()) return false;
  return true;
}

std::vector<IndexSet> facet_ray_sets(const Fan& f, std::size_t s) {
  std::vector<IndexSet> out;
  for (const auto& h : f.cone(s).description().facets) {
    IndexSet face;
    for (auto i : f.max_cones()[s])
      if (dot(std::span<const Integer>(h), std::span<const Integer>(f.ray(i))) == 0)
        face.push_back(i);
    out.push_back(std::move(face));
  }
  return out;
}

bool is_complete(const Fan& f) {
  const auto& mc = f.max_cones();
  if (mc.empty()) return false;
  for (std::size_t s = 0; s < mc.size(); ++s)
    if (f.cone(s).dimension() != f.rank()) return false;

  std::map<IndexSet, std::vector<std::size_t>> owners;
  for (std::size_t s = 0; s < mc.size(); ++s)
    for (auto& face : facet_ray_sets(f, s)) owners[std::move(face)].push_back(s);

  std::vector<std::vector<std::size_t>> adj(mc.size());
  for (const auto& [face, cones] : owners) {
    if (cones.size() != 2) return false;
    adj[cones[0]].push_back(cones[1]);
    adj[cones[1]].push_back(cones[0]);
  }
  std::vector<bool> seen(mc.size(), false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    const auto s = todo.front();
    todo.pop();
    for (auto t : adj[s])
      if (!seen[t]) {
        seen[t] = true;
        ++reached;
        todo.push(t);
      }
  }
  return reached == mc.size();
}

bool is_nondegenerate(const Fan& f) { return rank(f.ray_matrix()) == f.rank(); }

bool is_cartier(const Fan& f, std::span<const Integer> a, std::vector<IntVector>* witnesses) {
  if (a.size() != f.ray_count()) throw InputError("divisor has wrong length");
  std::vector<IntVector> found;
  for (std::size_t s = 0; s < f.max_cones().size(); ++s) {
    IntVector rhs;
    for (auto i : f.max_cones()[s]) rhs.push_back(-a[i]);
    auto m = solve_integral(f.cone_ray_matrix(s), rhs);
    if (!m) return false;
    found.push_back(std::move(*m));
  }
  if (witnesses) *witnesses = std::move(found);
  return true;
}

CartierLattice cartier_lattice(const Fan& f) {
  const std::size_t d = f.ray_count();
  const std::size_t n = f.rank();
  const auto& mc = f.max_cones();
  // Unknowns (a, m_1, ..., m_k); one row per (cone, ray): a_i + <m_s, v_i> = 0.
  IntMatrix system(0, d + n * mc.size());
  for (std::size_t s = 0; s < mc.size(); ++s) {
    for (auto i : mc[s]) {
      IntVector row(system.cols(), Integer(0));
      row[i] = 1;
      for (std::size_t k = 0; k < n; ++k) row[d + s * n + k] = f.ray(i)[k];
      system.append_row(row);
    }
  }
  IntMatrix projected(0, d);
  for (const auto& v : rational_kernel_basis(system))
    projected.append_row(std::span<const Integer>(v.data(), d));

  CartierLattice out;
  out.basis = lattice_basis(projected);
  for (std::size_t k = 0; k < out.basis.rows(); ++k) {
    std::vector<IntVector> w;
    if (!is_cartier(f, out.basis.row(k), &w))
      throw Error("Cartier basis element without witnesses (internal error)");
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

IntMatrix principal_divisors(const Fan& f) { return f.ray_matrix(); }

bool fans_equal(const Fan& a, const Fan& b) {
  if (a.rank() != b.rank() || a.ray_count() != b.ray_count() ||
      a.max_cones().size() != b.max_cones().size())
    return false;
  std::vector<std::size_t> to_b(a.ray_count());
  for (std::size_t i = 0; i < a.ray_count(); ++i) {
    auto it = std::find(b.rays().begin(), b.rays().end(), a.ray(i));
    if (it == b.rays().end()) return false;
    to_b[i] = static_cast<std::size_t>(it - b.rays().begin());
  }
  std::set<IndexSet> cones_b(b.max_cones().begin(), b.max_cones().end());
  for (const auto& c : a.max_cones()) {
    IndexSet mapped;
    for (auto i : c) mapped.push_back(to_b[i]);
    std::sort(mapped.begin(), mapped.end());
    if (!cones_b.count(mapped)) return false;
  }
  return true;
}

}  // namespace toriclab
