#include "toriclab/cone.hpp"

#include "toriclab/lattice.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <mutex>
#include <set>

namespace toriclab {

namespace {

using Bits = boost::dynamic_bitset<>;

struct DdRay {
  IntVector t;
  Bits zero;  // processed constraints tight at this ray
};

IntMatrix rows_to_matrix(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void insert_unique(std::vector<IntVector>& out, IntVector v) {
  if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
}

// Extreme rays of the pointed cone {t : A t >= 0}, A of full column rank.
std::vector<IntVector> double_description(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t s = a.cols();

  // Greedy choice of s independent rows for the initial simplicial cone.
  std::vector<std::size_t> initial;
  {
    RatMatrix chosen(0, s);
    for (std::size_t i = 0; i < m && initial.size() < s; ++i) {
      RatMatrix trial = chosen;
      const RatVector row = to_rational(a.row(i));
      trial.append_row(row);
      if (rank(trial) > initial.size()) {
        chosen = std::move(trial);
        initial.push_back(i);
      }
    }
    if (initial.size() != s) throw Error("double description: constraints not of full rank");
  }

  // Columns of the inverse of the initial block are the initial rays.
  std::vector<DdRay> rays;
  {
    const RatMatrix block = to_rational(a.select_rows(initial));
    for (std::size_t k = 0; k < s; ++k) {
      RatVector e(s, Rational(0));
      e[k] = 1;
      auto col = solve_rational(block, e);
      DdRay r{primitive(std::span<const Rational>(*col)), Bits(m)};
      for (std::size_t j = 0; j < s; ++j)
        if (j != k) r.zero.set(initial[j]);
      rays.push_back(std::move(r));
    }
  }

  std::vector<bool> in_initial(m, false);
  for (auto i : initial) in_initial[i] = true;

  for (std::size_t i = 0; i < m; ++i) {
    if (in_initial[i]) continue;
    const auto row = a.row(i);
    std::vector<std::size_t> pos, neg;
    std::vector<Integer> val(rays.size());
    std::vector<DdRay> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(row, std::span<const Integer>(rays[r].t));
      if (val[r] > 0) pos.push_back(r);
      if (val[r] < 0) neg.push_back(r);
    }
    if (neg.empty()) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (val[r] == 0) rays[r].zero.set(i);
      continue;
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (val[r] < 0) continue;
      DdRay kept = rays[r];
      if (val[r] == 0) kept.zero.set(i);
      next.push_back(std::move(kept));
    }
    for (auto p : pos) {
      for (auto q : neg) {
        Bits common = rays[p].zero & rays[q].zero;
        if (common.count() + 2 < s) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector combo(s);
        for (std::size_t k = 0; k < s; ++k)
          combo[k] = val[p] * rays[q].t[k] - val[q] * rays[p].t[k];
        common.set(i);
        next.push_back({primitive(std::span<const Integer>(combo)), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  std::vector<IntVector> out;
  for (auto& r : rays) insert_unique(out, std::move(r.t));
  return out;
}

}  // namespace

RayDecomposition extreme_rays(const IntMatrix& a) {
  RayDecomposition out;
  out.lineality = nullspace(a);
  const auto w = row_space_basis(a);
  if (w.empty()) return out;
  const IntMatrix wt = rows_to_matrix(w, a.cols()).transpose();  // n x s
  const auto rays = double_description(a * wt);
  for (const auto& t : rays) {
    IntVector x = wt * t;
    insert_unique(out.rays, primitive(std::span<const Integer>(x)));
  }
  std::sort(out.rays.begin(), out.rays.end());
  return out;
}

struct Cone::Cache {
  std::once_flag once;
  ConeDescription desc;
};

Cone::Cone(std::size_t ambient_rank)
    : ambient_rank_(ambient_rank), cache_(std::make_shared<Cache>()) {}

Cone::Cone(std::size_t ambient_rank, const std::vector<IntVector>& generators)
    : ambient_rank_(ambient_rank), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators) {
    if (g.size() != ambient_rank) throw InputError("cone generator has wrong length");
    if (toriclab::is_zero(std::span<const Integer>(g))) continue;
    insert_unique(generators_, primitive(std::span<const Integer>(g)));
  }
}

Cone Cone::from_constraints(std::size_t n, const IntMatrix& equations,
                            const IntMatrix& inequalities) {
  IntMatrix a(0, n);
  for (std::size_t i = 0; i < equations.rows(); ++i) {
    a.append_row(equations.row(i));
    IntVector neg = equations.row_vector(i);
    for (auto& x : neg) x = -x;
    a.append_row(neg);
  }
  for (std::size_t i = 0; i < inequalities.rows(); ++i) a.append_row(inequalities.row(i));
  const auto rd = extreme_rays(a);
  std::vector<IntVector> gens = rd.rays;
  for (const auto& l : rd.lineality) {
    gens.push_back(l);
    IntVector neg = l;
    for (auto& x : neg) x = -x;
    gens.push_back(std::move(neg));
  }
  return Cone(n, gens);
}

const ConeDescription& Cone::description() const {
  std::call_once(cache_->once, [this] {
    ConeDescription& d = cache_->desc;
    const std::size_t n = ambient_rank_;
    if (generators_.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n, Integer(0));
        e[i] = 1;
        d.equations.push_back(std::move(e));
      }
      return;
    }
    const IntMatrix g = rows_to_matrix(generators_, n);
    d.span_basis = row_space_basis(g);
    d.equations = nullspace(g);
    d.facets = extreme_rays(g).rays;
    std::vector<IntVector> tight = d.equations;
    tight.insert(tight.end(), d.facets.begin(), d.facets.end());
    d.lineality = nullspace(rows_to_matrix(tight, n));
  });
  return cache_->desc;
}

bool Cone::contains(std::span<const Integer> x) const {
  const auto rx = to_rational(x);
  return contains(std::span<const Rational>(rx));
}

bool Cone::contains(std::span<const Rational> x) const {
  if (x.size() != ambient_rank_) throw InputError("point has wrong length");
  const auto& d = description();
  for (const auto& e : d.equations)
    if (dot(x, std::span<const Integer>(e)) != 0) return false;
  for (const auto& h : d.facets)
    if (dot(x, std::span<const Integer>(h)) < 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  if (other.ambient_rank_ != ambient_rank_) return false;
  for (const auto& g : other.generators_)
    if (!contains(std::span<const Integer>(g))) return false;
  return true;
}

bool Cone::in_relative_interior(std::span<const Rational> x) const {
  if (x.size() != ambient_rank_) throw InputError("point has wrong length");
  const auto& d = description();
  for (const auto& e : d.equations)
    if (dot(x, std::span<const Integer>(e)) != 0) return false;
  for (const auto& h : d.facets)
    if (dot(x, std::span<const Integer>(h)) <= 0) return false;
  return true;
}

std::vector<IntVector> Cone::extremal_generators() const {
  std::vector<IntVector> out;
  if (!is_pointed()) return out;
  const auto& facets = description().facets;
  auto tight_set = [&](const IntVector& g) {
    std::vector<std::size_t> t;
    for (std::size_t k = 0; k < facets.size(); ++k)
      if (dot(std::span<const Integer>(facets[k]), std::span<const Integer>(g)) == 0)
        t.push_back(k);
    return t;
  };
  for (const auto& g : generators_) {
    const auto tg = tight_set(g);
    bool extremal = true;
    for (const auto& other : generators_) {
      if (&other == &g) continue;
      const auto to = tight_set(other);
      if (std::includes(to.begin(), to.end(), tg.begin(), tg.end())) {
        extremal = false;
        break;
      }
    }
    if (extremal) out.push_back(g);
  }
  return out;
}

bool operator==(const Cone& a, const Cone& b) {
  return a.ambient_rank() == b.ambient_rank() && a.contains(b) && b.contains(a);
}

const ConeDescription& facet_description(const Cone& c) { return c.description(); }

bool is_pointed(const Cone& c) { return c.is_pointed(); }

bool is_face(const Cone& f, const Cone& c) {
  if (f.ambient_rank() != c.ambient_rank()) throw InputError("is_face: rank mismatch");
  if (!c.contains(f)) return false;
  // Smallest face of c containing f: cut by every facet vanishing on f.
  const auto& facets = c.description().facets;
  std::vector<const IntVector*> tight;
  for (const auto& h : facets) {
    bool vanishes = true;
    for (const auto& g : f.generators())
      if (dot(std::span<const Integer>(h), std::span<const Integer>(g)) != 0) {
        vanishes = false;
        break;
      }
    if (vanishes) tight.push_back(&h);
  }
  for (const auto& g : c.generators()) {
    bool in_face = true;
    for (const auto* h : tight)
      if (dot(std::span<const Integer>(*h), std::span<const Integer>(g)) != 0) {
        in_face = false;
        break;
      }
    if (in_face && !f.contains(std::span<const Integer>(g))) return false;
  }
  return true;
}

bool in_relative_interior(std::span<const Rational> x, const Cone& c) {
  return c.in_relative_interior(x);
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw InputError("intersect: rank mismatch");
  const std::size_t n = a.ambient_rank();
  std::vector<IntVector> eqs = a.description().equations;
  eqs.insert(eqs.end(), b.description().equations.begin(), b.description().equations.end());
  std::vector<IntVector> ineqs = a.description().facets;
  ineqs.insert(ineqs.end(), b.description().facets.begin(), b.description().facets.end());
  return Cone::from_constraints(n, rows_to_matrix(eqs, n), rows_to_matrix(ineqs, n));
}

Cone image_cone(const IntMatrix& m, const Cone& c) {
  if (m.cols() != c.ambient_rank()) throw InputError("image_cone: shape mismatch");
  std::vector<IntVector> gens;
  gens.reserve(c.generators().size());
  for (const auto& g : c.generators()) gens.push_back(m * g);
  return Cone(m.rows(), gens);
}

}  // namespace toriclab
