#include "toriclab/random_fans.hpp"

#include "toriclab/lattice.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <limits>
#include <optional>

namespace toriclab {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

IntMatrix random_unimodular(std::size_t n, Rng& rng) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && rng.uniform(0, 1)) u.negate_column(0);
    return u;
  }
  const auto last = static_cast<std::int64_t>(n - 1);
  for (std::size_t step = 0; step < 3 * n; ++step) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, last));
    auto j = static_cast<std::size_t>(rng.uniform(0, last - 1));
    if (j >= i) ++j;
    switch (rng.uniform(0, 3)) {
      case 0: u.swap_columns(i, j); break;
      case 1: u.negate_column(i); break;
      default: u.add_column_multiple(i, j, Integer(rng.uniform(-2, 2))); break;
    }
  }
  return u;
}

Fan transform_fan(const Fan& f, const IntMatrix& u) {
  std::vector<IntVector> rays;
  for (const auto& r : f.rays()) rays.push_back(u * r);
  return Fan(f.rank(), std::move(rays), f.max_cones(), f.name());
}

Fan oda_fan() {
  std::vector<IntVector> rays = {{-1, 0, 0}, {0, -1, 0}, {0, 0, -1},
                                 {0, 1, 1},  {1, 0, 1},  {1, 1, 0}};
  std::vector<IndexSet> cones = {{0, 3, 5}, {0, 2, 5}, {2, 4, 5}, {1, 2, 4},
                                 {1, 3, 4}, {0, 1, 3}, {0, 1, 2}, {3, 4, 5}};
  return Fan(3, std::move(rays), std::move(cones), "oda");
}

namespace {

// Cheap necessary condition for simplicial fans: two maximal cones sharing a
// facet lie on opposite sides of it.
bool locally_convex(const Fan& f) {
  const auto& mc = f.max_cones();
  for (std::size_t s = 0; s < mc.size(); ++s)
    for (std::size_t t = s + 1; t < mc.size(); ++t) {
      IndexSet common, only_s, only_t;
      std::set_intersection(mc[s].begin(), mc[s].end(), mc[t].begin(), mc[t].end(),
                            std::back_inserter(common));
      if (common.size() + 1 != f.rank() || mc[s].size() != f.rank() || mc[t].size() != f.rank())
        continue;
      std::set_difference(mc[s].begin(), mc[s].end(), common.begin(), common.end(),
                          std::back_inserter(only_s));
      std::set_difference(mc[t].begin(), mc[t].end(), common.begin(), common.end(),
                          std::back_inserter(only_t));
      IntMatrix a(0, f.rank());
      for (auto i : common) a.append_row(f.ray(i));
      IntMatrix b = a;
      a.append_row(f.ray(only_s[0]));
      b.append_row(f.ray(only_t[0]));
      if (determinant(a) * determinant(b) >= 0) return false;
    }
  return true;
}

bool complete_fan(const Fan& f) {
  return (!is_simplicial(f) || locally_convex(f)) && is_complete(f) && validate_fan(f).valid();
}

std::vector<IndexSet> combinations(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > n) return out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    IndexSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Some t > 0 with u_i + t v_i < 0 for all i, i.e. e_1..e_n, u, v span
// positively.
bool spans_positively(const IntVector& u, const IntVector& v) {
  Rational lo = 0;
  std::optional<Rational> hi;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (v[i] == 0) {
      if (u[i] >= 0) return false;
      continue;
    }
    const Rational bound(Integer(-u[i]), v[i]);
    if (v[i] > 0) {
      if (!hi || bound < *hi) hi = bound;
    } else if (bound > lo) {
      lo = bound;
    }
  }
  return !hi || lo < *hi;
}

IntVector random_vector(std::size_t n, Rng& rng, std::int64_t lo, std::int64_t hi) {
  IntVector v(n);
  for (auto& x : v) x = rng.uniform(lo, hi);
  return v;
}

std::optional<Fan> try_two_extra(std::size_t n, Rng& rng) {
  IntVector u = random_vector(n, rng, -3, 3);
  IntVector v = random_vector(n, rng, -3, 3);
  if (is_zero(std::span<const Integer>(u)) || is_zero(std::span<const Integer>(v))) return std::nullopt;
  u = primitive(std::span<const Integer>(u));
  v = primitive(std::span<const Integer>(v));
  if (u == v || !spans_positively(u, v)) return std::nullopt;
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, Integer(0));
    e[i] = 1;
    if (e == u || e == v) return std::nullopt;
    rays.push_back(std::move(e));
  }
  rays.push_back(u);
  rays.push_back(v);

  // Every complete simplicial fan using all n+2 rays is a join of two
  // simplex boundaries: for a split of the rays into parts A, B of size >= 2
  // its maximal cones omit one ray of A and one ray of B.
  const std::size_t d = n + 2;
  std::vector<Fan> found;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << d); ++mask) {
    if (mask & 1) continue;  // count each split once: ray 0 lies in B
    IndexSet a, b;
    for (std::size_t i = 0; i < d; ++i) ((mask >> i) & 1 ? a : b).push_back(i);
    if (a.size() < 2 || b.size() < 2) continue;
    std::vector<IndexSet> cones;
    for (auto i : a)
      for (auto j : b) {
        IndexSet c;
        for (std::size_t r = 0; r < d; ++r)
          if (r != i && r != j) c.push_back(r);
        cones.push_back(std::move(c));
      }
    Fan f(n, rays, std::move(cones));
    if (complete_fan(f)) found.push_back(std::move(f));
  }
  if (found.empty()) return std::nullopt;
  return found[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(found.size()) - 1))];
}

using Point = std::array<std::int64_t, 3>;

std::int64_t det3(const Point& a, const Point& b, const Point& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Point minus(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

// Face fan of conv(points) when it is simplicial and contains 0 in its
// interior; brute force over triples.
std::optional<Fan> face_fan(const std::vector<Point>& pts) {
  const std::size_t m = pts.size();
  std::vector<IndexSet> facets;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        const Point b = minus(pts[j], pts[i]), c = minus(pts[k], pts[i]);
        int pos = 0, neg = 0, flat = 0;
        for (std::size_t l = 0; l < m; ++l) {
          if (l == i || l == j || l == k) continue;
          const auto s = det3(minus(pts[l], pts[i]), b, c);
          (s > 0 ? pos : s < 0 ? neg : flat)++;
        }
        if (pos > 0 && neg > 0) continue;
        if (pos == 0 && neg == 0) return std::nullopt;  // everything coplanar
        if (flat > 0) return std::nullopt;               // non-triangular face
        const Point origin{0, 0, 0};
        const auto so = det3(minus(origin, pts[i]), b, c);
        if (so == 0 || (so > 0) != (pos > 0)) return std::nullopt;  // 0 not interior
        facets.push_back({i, j, k});
      }
  if (facets.size() < 4) return std::nullopt;
  IndexSet used;
  for (const auto& f : facets) used.insert(used.end(), f.begin(), f.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<std::size_t> index(m, 0);
  std::vector<IntVector> rays;
  for (std::size_t r = 0; r < used.size(); ++r) {
    index[used[r]] = r;
    const Point& p = pts[used[r]];
    rays.push_back({p[0], p[1], p[2]});
  }
  for (auto& f : facets)
    for (auto& i : f) i = index[i];
  return Fan(3, std::move(rays), std::move(facets));
}

// Replaces two cones {a,b,c}, {a,b,d} by {a,c,d}, {b,c,d} if that is again a
// complete fan.
std::optional<Fan> random_flip(const Fan& f, Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const auto& mc = f.max_cones();
  for (std::size_t s = 0; s < mc.size(); ++s)
    for (std::size_t t = s + 1; t < mc.size(); ++t) {
      IndexSet common;
      std::set_intersection(mc[s].begin(), mc[s].end(), mc[t].begin(), mc[t].end(),
                            std::back_inserter(common));
      if (common.size() == 2) pairs.emplace_back(s, t);
    }
  if (pairs.empty()) return std::nullopt;
  const auto [s, t] = pairs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pairs.size()) - 1))];
  IndexSet common, only_s, only_t;
  std::set_intersection(mc[s].begin(), mc[s].end(), mc[t].begin(), mc[t].end(), std::back_inserter(common));
  std::set_difference(mc[s].begin(), mc[s].end(), mc[t].begin(), mc[t].end(), std::back_inserter(only_s));
  std::set_difference(mc[t].begin(), mc[t].end(), mc[s].begin(), mc[s].end(), std::back_inserter(only_t));
  std::vector<IndexSet> cones;
  for (std::size_t r = 0; r < mc.size(); ++r)
    if (r != s && r != t) cones.push_back(mc[r]);
  for (auto a : common) {
    IndexSet c{a, only_s[0], only_t[0]};
    std::sort(c.begin(), c.end());
    if (std::find(cones.begin(), cones.end(), c) != cones.end()) return std::nullopt;
    cones.push_back(std::move(c));
  }
  Fan g(f.rank(), f.rays(), std::move(cones), f.name());
  if (!complete_fan(g)) return std::nullopt;
  return g;
}

}  // namespace

Fan random_kleinschmidt_fan(std::size_t n, std::size_t d, Rng& rng) {
  if (n == 0 || (d != n + 1 && d != n + 2))
    throw InputError("random fans: need d = n+1 or d = n+2 rays");
  if (d == n + 2 && n < 2) throw InputError("random fans: d = n+2 needs n >= 2");
  const IntMatrix u = random_unimodular(n, rng);
  if (d == n + 1) {
    std::vector<IntVector> rays;
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n, Integer(0));
      e[i] = 1;
      rays.push_back(std::move(e));
    }
    rays.push_back(random_vector(n, rng, -3, -1));
    return transform_fan(Fan(n, std::move(rays), combinations(n + 1, n)), u);
  }
  while (true)
    if (auto f = try_two_extra(n, rng)) return transform_fan(*f, u);
}

Fan random_complete_fan3(std::size_t max_rays, Rng& rng) {
  if (max_rays < 4) throw InputError("random fans: a complete fan in Z^3 needs 4 rays");
  while (true) {
    std::optional<Fan> f;
    if (max_rays >= 6 && rng.uniform(0, 3) == 0) {
      f = transform_fan(oda_fan(), random_unimodular(3, rng));
    } else {
      const auto m = rng.uniform(4, static_cast<std::int64_t>(max_rays));
      std::vector<Point> pts;
      while (pts.size() < static_cast<std::size_t>(m)) {
        Point p{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
        if (p == Point{0, 0, 0} || std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
        pts.push_back(p);
      }
      f = face_fan(pts);
      if (!f || !complete_fan(*f)) continue;
    }
    const auto flips = rng.uniform(0, 3);
    for (std::int64_t i = 0; i < flips; ++i)
      if (auto g = random_flip(*f, rng)) f = std::move(g);
    return *f;
  }
}

}  // namespace toriclab
