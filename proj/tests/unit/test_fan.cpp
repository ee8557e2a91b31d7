#include "oracles.hpp"

#include "toriclab/io.hpp"
#include "toriclab/lattice.hpp"
#include "toriclab/random_fans.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace toriclab;

namespace {

Fan data_fan(const std::string& name) { return read_fan(std::string(TORICLAB_DATA_DIR) + "/" + name + ".fan.json"); }

bool has_kind(const ValidationReport& r, ViolationKind k) {
  for (const auto& v : r.violations)
    if (v.kind == k) return true;
  return false;
}

}  // namespace

TEST(Fan, ConstructorNormalisesRays) {
  const Fan f(2, {{2, 0}, {0, 3}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(f.ray(0), (IntVector{1, 0}));
  EXPECT_EQ(f.ray(1), (IntVector{0, 1}));
  EXPECT_EQ(f.ray_scaling(), (std::vector<Integer>{2, 3, 1}));
  EXPECT_EQ(f.max_cones()[2], (IndexSet{0, 2}));
}

TEST(Fan, ConstructorRejectsBadInput) {
  EXPECT_THROW(Fan(2, {{1, 0}, {2, 0}}, {{0}, {1}}), InputError);
  EXPECT_THROW(Fan(2, {{0, 0}}, {{0}}), InputError);
  EXPECT_THROW(Fan(2, {{1, 0, 0}}, {{0}}), InputError);
  EXPECT_THROW(Fan(2, {{1, 0}}, {{1}}), InputError);
}

TEST(Fan, BundledFansAreValid) {
  for (const char* name : {"oda", "oda-coxlift", "oda-quasiaffine", "div4", "div4-cover", "p1", "p2", "p1xp1"})
    EXPECT_TRUE(validate_fan(data_fan(name)).valid()) << name;
}

TEST(Fan, ValidationFindsOverlap) {
  const Fan f = read_fan(std::string(TORICLAB_FIXTURE_DIR) + "/overlapping.fan.json");
  const auto rep = validate_fan(f);
  ASSERT_FALSE(rep.valid());
  EXPECT_EQ(rep.violations[0].kind, ViolationKind::intersection_not_face);
  EXPECT_EQ(rep.violations[0].cones, (std::vector<std::size_t>{0, 1}));
}

TEST(Fan, ValidationKinds) {
  // Non-pointed cone.
  EXPECT_TRUE(has_kind(validate_fan(Fan(1, {{1}, {-1}}, {{0, 1}})), ViolationKind::not_pointed));
  // A ray in the middle of a cone.
  EXPECT_TRUE(has_kind(validate_fan(Fan(2, {{1, 0}, {1, 1}, {0, 1}}, {{0, 1, 2}})),
                       ViolationKind::ray_not_extremal));
  // A foreign ray inside a cone.
  EXPECT_TRUE(has_kind(validate_fan(Fan(2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 1}, {2}})),
                       ViolationKind::foreign_ray_inside));
  EXPECT_TRUE(has_kind(validate_fan(Fan(2, {{1, 0}, {0, 1}, {-1, 0}}, {{0, 1}})), ViolationKind::unused_ray));
  EXPECT_TRUE(has_kind(validate_fan(Fan(2, {{1, 0}, {0, 1}}, {{0, 1}, {1, 0}})), ViolationKind::duplicate_cone));
  EXPECT_TRUE(has_kind(validate_fan(Fan(2, {{1, 0}, {0, 1}}, {{0, 1}, {0}})),
                       ViolationKind::cone_is_face_of_other));
}

TEST(Fan, Predicates) {
  const Fan oda = data_fan("oda");
  EXPECT_TRUE(is_simplicial(oda));
  EXPECT_TRUE(is_complete(oda));
  EXPECT_TRUE(is_nondegenerate(oda));
  const Fan s4 = data_fan("div4");
  EXPECT_FALSE(is_simplicial(s4));
  EXPECT_FALSE(is_complete(s4));
  EXPECT_TRUE(is_nondegenerate(s4));
  EXPECT_FALSE(is_nondegenerate(Fan(2, {{1, 0}, {-1, 0}}, {{0}, {1}})));
  EXPECT_FALSE(is_complete(Fan(2, {{1, 0}, {0, 1}}, {{0, 1}})));
}

TEST(Fan, FacetRaySets) {
  const Fan p2 = data_fan("p2");
  EXPECT_EQ(facet_ray_sets(p2, 0).size(), 2u);
  const Fan s4 = data_fan("div4");
  // cone(v2,..,v6) is a 4-dimensional cone with 5 rays.
  for (const auto& f : facet_ray_sets(s4, 0)) EXPECT_GE(f.size(), 3u);
}

TEST(Fan, CompletenessAgreesWithSampling) {
  Rng rng(41);
  std::mt19937_64 sampler(42);
  for (int t = 0; t < 15; ++t) {
    const Fan f = random_complete_fan3(8, rng);
    ASSERT_TRUE(is_complete(f));
    EXPECT_TRUE(oracle::covered_by(f, sampler, 200));
  }
  for (const char* name : {"oda", "p2", "p1xp1"}) EXPECT_TRUE(oracle::covered_by(data_fan(name), sampler, 200)) << name;
  // An incomplete fan misses some sample.
  EXPECT_FALSE(oracle::covered_by(data_fan("div4"), sampler, 200));
}

TEST(Fan, CartierLatticeOfSection4FanMatchesKnownBasis) {
  const Fan f = data_fan("div4");
  const auto c = cartier_lattice(f);
  EXPECT_EQ(c.rank(), 7u);
  // D6, D8, D9, D1+D7, D2+D3, D4+D5, D2+D4+D7.
  const IntMatrix known = {{0, 0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 1},
                           {1, 0, 0, 0, 0, 0, 1, 0, 0}, {0, 1, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 0, 0, 0, 0},
                           {0, 1, 0, 1, 0, 0, 1, 0, 0}};
  EXPECT_TRUE(same_lattice(c.basis, known));
}

TEST(Fan, CartierMembershipAgreesWithBruteForce) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> d(-2, 2);
  for (const char* name : {"div4", "oda", "p1xp1"}) {
    const Fan f = data_fan(name);
    const auto c = cartier_lattice(f);
    const IntMatrix bt = c.basis.transpose();
    for (int t = 0; t < 25; ++t) {
      IntVector a(f.ray_count());
      for (auto& x : a) x = d(rng);
      // Every integral m with |m_j| <= 6 suffices for these small fans.
      bool brute = true;
      for (std::size_t s = 0; s < f.max_cones().size() && brute; ++s)
        brute = oracle::cartier_on_cone_brute(f, s, a, 6);
      EXPECT_EQ(is_cartier(f, a), brute) << name;
      EXPECT_EQ(in_lattice_image(a, bt), brute) << name;
    }
  }
}

TEST(Fan, CartierWitnessesAreExact) {
  const Fan f = data_fan("div4");
  const auto c = cartier_lattice(f);
  for (std::size_t k = 0; k < c.rank(); ++k)
    for (std::size_t s = 0; s < f.max_cones().size(); ++s) {
      const IntVector& m = c.witnesses[k][s];
      for (auto i : f.max_cones()[s])
        EXPECT_EQ(dot(std::span<const Integer>(m), std::span<const Integer>(f.ray(i))), -c.basis(k, i));
    }
}

TEST(Fan, PrincipalDivisorsAreCartier) {
  const Fan f = data_fan("div4");
  const IntMatrix p = principal_divisors(f);
  for (std::size_t j = 0; j < p.cols(); ++j) EXPECT_TRUE(is_cartier(f, p.column(j)));
}

TEST(Fan, EqualityIgnoresOrder) {
  const Fan a(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}});
  const Fan b(2, {{-1, -1}, {1, 0}, {0, 1}}, {{1, 2}, {0, 1}, {0, 2}});
  EXPECT_TRUE(fans_equal(a, b));
  const Fan c(2, {{-1, -1}, {1, 0}, {0, 1}}, {{1, 2}, {0, 1}});
  EXPECT_FALSE(fans_equal(a, c));
}
