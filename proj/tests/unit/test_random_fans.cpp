#include "toriclab/io.hpp"
#include "toriclab/lattice.hpp"
#include "toriclab/random_fans.hpp"

#include <gtest/gtest.h>

using namespace toriclab;

TEST(Rng, BoundedDrawStaysInRange) {
  Rng rng(1);
  std::vector<int> seen(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto x = rng.uniform(-3, 3);
    ASSERT_GE(x, -3);
    ASSERT_LE(x, 3);
    ++seen[static_cast<std::size_t>(x + 3)];
  }
  for (int c : seen) EXPECT_GT(c, 800);
}

TEST(Rng, SeedDeterminesSequence) {
  Rng a(9), b(9), c(10);
  bool differs = false;
  for (int i = 0; i < 20; ++i) {
    const auto x = a.uniform(0, 1000);
    EXPECT_EQ(x, b.uniform(0, 1000));
    differs = differs || x != c.uniform(0, 1000);
  }
  EXPECT_TRUE(differs);
}

TEST(RandomFans, UnimodularMaps) {
  Rng rng(2);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int t = 0; t < 10; ++t) EXPECT_EQ(abs(determinant(random_unimodular(n, rng))), 1);
}

TEST(RandomFans, KleinschmidtFansAreCompleteAndSimplicial) {
  Rng rng(3);
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t d : {n + 1, n + 2})
      for (int t = 0; t < 5; ++t) {
        const Fan f = random_kleinschmidt_fan(n, d, rng);
        EXPECT_EQ(f.ray_count(), d);
        EXPECT_TRUE(validate_fan(f).valid());
        EXPECT_TRUE(is_complete(f));
        EXPECT_TRUE(is_simplicial(f));
      }
}

TEST(RandomFans, ProjectiveLine) {
  Rng rng(4);
  const Fan f = random_kleinschmidt_fan(1, 2, rng);
  EXPECT_TRUE(fans_equal(f, Fan(1, {{1}, {-1}}, {{0}, {1}})));
}

TEST(RandomFans, Deterministic) {
  Rng a(5), b(5);
  for (int t = 0; t < 5; ++t) {
    EXPECT_EQ(fan_to_json(random_kleinschmidt_fan(3, 5, a)), fan_to_json(random_kleinschmidt_fan(3, 5, b)));
    EXPECT_EQ(fan_to_json(random_complete_fan3(8, a)), fan_to_json(random_complete_fan3(8, b)));
  }
}

TEST(RandomFans, GeneralFansInThreeSpace) {
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    const Fan f = random_complete_fan3(8, rng);
    EXPECT_LE(f.ray_count(), 8u);
    EXPECT_GE(f.ray_count(), 4u);
    EXPECT_TRUE(validate_fan(f).valid());
    EXPECT_TRUE(is_complete(f));
    EXPECT_TRUE(is_simplicial(f));
  }
}

TEST(RandomFans, BadArguments) {
  Rng rng(7);
  EXPECT_THROW(random_kleinschmidt_fan(3, 7, rng), InputError);
  EXPECT_THROW(random_kleinschmidt_fan(1, 3, rng), InputError);
  EXPECT_THROW(random_kleinschmidt_fan(0, 1, rng), InputError);
  EXPECT_THROW(random_complete_fan3(3, rng), InputError);
}

TEST(RandomFans, OdaFanIsValid) {
  const Fan f = oda_fan();
  EXPECT_TRUE(validate_fan(f).valid());
  EXPECT_TRUE(is_complete(f));
  EXPECT_TRUE(fans_equal(f, read_fan(std::string(TORICLAB_DATA_DIR) + "/oda.fan.json")));
}
