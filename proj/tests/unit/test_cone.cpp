#include "oracles.hpp"

#include "toriclab/cone.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace toriclab;

namespace {

std::vector<IntVector> random_generators(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::uniform_int_distribution<int> first(1, 3);  // keeps the cone pointed
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < m; ++i) {
    IntVector v(n);
    v[0] = first(rng);
    for (std::size_t j = 1; j < n; ++j) v[j] = d(rng);
    gens.push_back(std::move(v));
  }
  return gens;
}

std::vector<IntVector> sorted(std::vector<IntVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Cone, FacetsMatchBruteForce) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 2 + t % 3;
    const auto gens = random_generators(rng, n, 2 + t % 5);
    const Cone c(n, gens);
    EXPECT_EQ(sorted(c.description().facets), oracle::facets(c.generators(), n)) << "trial " << t;
  }
}

TEST(Cone, LowerDimensionalFacetsLieInSpan) {
  // A 2-dimensional cone in Z^3.
  const Cone c(3, {{1, 0, 0}, {1, 1, 0}});
  const auto& d = c.description();
  EXPECT_EQ(c.dimension(), 2u);
  EXPECT_EQ(d.equations.size(), 1u);
  EXPECT_EQ(sorted(d.facets), oracle::facets(c.generators(), 3));
}

TEST(Cone, MembershipMatchesFourierMotzkin) {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + t % 3;
    const Cone c(n, random_generators(rng, n, 2 + t % 4));
    for (int s = 0; s < 10; ++s) {
      RatVector x(n);
      for (auto& e : x) e = d(rng);
      EXPECT_EQ(c.contains(std::span<const Rational>(x)), oracle::in_cone(c.generators(), x));
    }
    // Positive combinations of generators are always inside.
    RatVector y(n, Rational(0));
    for (const auto& g : c.generators())
      for (std::size_t j = 0; j < n; ++j) y[j] += Rational(g[j]) * Rational(1, 3);
    EXPECT_TRUE(c.contains(std::span<const Rational>(y)));
  }
}

TEST(Cone, ExtremalGeneratorsDropRedundantOnes) {
  const Cone c(2, {{1, 0}, {1, 1}, {0, 1}, {2, 0}});
  EXPECT_EQ(sorted(c.extremal_generators()), (std::vector<IntVector>{{0, 1}, {1, 0}}));
}

TEST(Cone, ExtremeRaysOfOrthant) {
  const auto dec = extreme_rays(IntMatrix::identity(3));
  EXPECT_TRUE(dec.lineality.empty());
  EXPECT_EQ(sorted(dec.rays), (std::vector<IntVector>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  const auto half = extreme_rays(IntMatrix{{1, 0}});
  EXPECT_EQ(half.lineality.size(), 1u);
  EXPECT_EQ(half.rays.size(), 1u);
}

TEST(Cone, PointedAndLineality) {
  EXPECT_TRUE(Cone(2, {{1, 0}, {0, 1}}).is_pointed());
  EXPECT_FALSE(Cone(2, {{1, 0}, {-1, 0}, {0, 1}}).is_pointed());
  EXPECT_EQ(Cone(2, {{1, 0}, {-1, 0}, {0, 1}}).description().lineality.size(), 1u);
}

TEST(Cone, FaceRelation) {
  const Cone quadrant(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_TRUE(is_face(Cone(3, {{1, 0, 0}, {0, 1, 0}}), quadrant));
  EXPECT_TRUE(is_face(Cone(3, {{0, 0, 1}}), quadrant));
  EXPECT_TRUE(is_face(Cone(3), quadrant));
  EXPECT_TRUE(is_face(quadrant, quadrant));
  EXPECT_FALSE(is_face(Cone(3, {{1, 1, 0}}), quadrant));
  EXPECT_FALSE(is_face(Cone(3, {{1, 0, 0}, {0, 1, 1}}), quadrant));
}

TEST(Cone, RelativeInterior) {
  const Cone c(3, {{1, 0, 0}, {0, 1, 0}});
  const RatVector inside = {Rational(1), Rational(2), Rational(0)};
  const RatVector boundary = {Rational(1), Rational(0), Rational(0)};
  const RatVector off_span = {Rational(1), Rational(1), Rational(1)};
  EXPECT_TRUE(c.in_relative_interior(inside));
  EXPECT_FALSE(c.in_relative_interior(boundary));
  EXPECT_FALSE(c.in_relative_interior(off_span));
  const RatVector zero(3, Rational(0));
  EXPECT_TRUE(Cone(3).in_relative_interior(zero));
}

TEST(Cone, IntersectionAndEquality) {
  const Cone a(2, {{1, 0}, {1, 2}});
  const Cone b(2, {{1, 1}, {0, 1}});
  EXPECT_EQ(intersect(a, b), Cone(2, {{1, 1}, {1, 2}}));
  EXPECT_EQ(Cone(2, {{2, 0}, {1, 1}, {0, 3}}), Cone(2, {{1, 0}, {0, 1}}));
  EXPECT_FALSE(Cone(2, {{1, 0}}) == Cone(2, {{0, 1}}));
}

TEST(Cone, FromConstraintsRoundTrip) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + t % 3;
    const Cone c(n, random_generators(rng, n, 3 + t % 3));
    const auto& d = c.description();
    IntMatrix eq(0, n), ineq(0, n);
    for (const auto& e : d.equations) eq.append_row(e);
    for (const auto& h : d.facets) ineq.append_row(h);
    EXPECT_EQ(Cone::from_constraints(n, eq, ineq), c);
  }
}

TEST(Cone, ImageCone) {
  const Cone c(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const IntMatrix p = {{1, 0, 1}, {0, 1, 1}};
  EXPECT_EQ(image_cone(p, c), Cone(2, {{1, 0}, {0, 1}}));
}
