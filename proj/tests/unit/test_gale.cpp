#include "oracles.hpp"

#include "toriclab/gale.hpp"
#include "toriclab/io.hpp"
#include "toriclab/random_fans.hpp"

#include <gtest/gtest.h>

using namespace toriclab;

namespace {

Fan data_fan(const std::string& name) { return read_fan(std::string(TORICLAB_DATA_DIR) + "/" + name + ".fan.json"); }

oracle::Rows rows_of(const RatMatrix& m) {
  oracle::Rows out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row_vector(i));
  return out;
}

// Shephard system over an arbitrary Gale matrix, built from the brute-force
// facet oracle.
bool shephard_by_oracle(const Fan& f, const IntMatrix& gale) {
  const std::size_t k = gale.rows();
  oracle::Rows eq, strict;
  for (const auto& sigma : f.max_cones()) {
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < f.ray_count(); ++i)
      if (std::find(sigma.begin(), sigma.end(), i) == sigma.end()) gens.push_back(gale.column(i));
    const auto span = oracle::to_rows(gens);
    for (auto& e : oracle::kernel(span, k)) eq.push_back(e);
    for (const auto& h : oracle::facets(gens, k)) strict.push_back(oracle::to_rows({h})[0]);
  }
  return oracle::strict_feasible(eq, {}, strict, k);
}

}  // namespace

TEST(Gale, ProjectivePlane) {
  const auto g = gale_transform(data_fan("p2"));
  EXPECT_EQ(g.gale, (IntMatrix{{1, 1, 1}}));
  const Cone c = coface(g, {0, 1});
  EXPECT_EQ(c, Cone(1, {{1}}));
  EXPECT_EQ(coface(g, {}), Cone(1, {{1}}));
  const auto v = shephard_test(data_fan("p2"));
  ASSERT_TRUE(v.strongly_polytopal);
  EXPECT_EQ(*v.witness, (IntVector{1}));
  EXPECT_TRUE(verify_verdict(data_fan("p2"), v));
}

TEST(Gale, RelationsAnnihilateRays) {
  for (const char* name : {"oda", "div4", "p1xp1", "oda-quasiaffine"}) {
    const Fan f = data_fan(name);
    const auto g = gale_transform(f);
    EXPECT_TRUE((g.gale * g.rays).is_zero()) << name;
    EXPECT_EQ(g.dimension(), f.ray_count() - f.rank()) << name;
  }
  EXPECT_THROW(gale_transform(Fan(2, {{1, 0}, {-1, 0}}, {{0}, {1}})), InputError);
}

TEST(Gale, TwoExtraRaysShape) {
  // R = (e1, e2, e3, u, v): columns ((u_i, v_i)..., (-1, 0), (0, -1)) are a
  // valid Gale matrix, and the coface of cone(e1, e2, e3) is spanned by
  // (-1, 0) and (0, -1).
  const IntVector u = {-1, 2, -1}, v = {1, -2, -1};
  IntMatrix gale(2, 5);
  for (std::size_t i = 0; i < 3; ++i) {
    gale(0, i) = u[i];
    gale(1, i) = v[i];
  }
  gale(0, 3) = -1;
  gale(1, 4) = -1;
  IntMatrix rays = IntMatrix::identity(3);
  rays.append_row(u);
  rays.append_row(v);
  EXPECT_TRUE((gale * rays).is_zero());
  GaleData g{rays, gale};
  EXPECT_EQ(coface(g, {0, 1, 2}), Cone(2, {{-1, 0}, {0, -1}}));
}

TEST(Projectivity, OdaFanIsNotProjective) {
  const Fan f = data_fan("oda");
  for (const auto& v : {shephard_test(f), support_function_test(f)}) {
    EXPECT_FALSE(v.strongly_polytopal) << to_string(v.method);
    ASSERT_TRUE(v.certificate);
    EXPECT_TRUE(verify_certificate(v.system, *v.certificate));
    EXPECT_TRUE(verify_verdict(f, v));
    EXPECT_TRUE(v.warnings.empty());
  }
  EXPECT_FALSE(shephard_by_oracle(f, gale_transform(f).gale));
}

TEST(Projectivity, SmoothProjectiveFans) {
  for (const char* name : {"p1", "p2", "p1xp1"}) {
    const Fan f = data_fan(name);
    const auto a = shephard_test(f);
    const auto b = support_function_test(f);
    EXPECT_TRUE(a.strongly_polytopal) << name;
    EXPECT_TRUE(b.strongly_polytopal) << name;
    EXPECT_TRUE(verify_verdict(f, a));
    EXPECT_TRUE(verify_verdict(f, b));
  }
}

TEST(Projectivity, IncompleteFanWarns) {
  const Fan f(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}});
  EXPECT_FALSE(shephard_test(f).warnings.empty());
}

TEST(Projectivity, TamperedWitnessIsRejected) {
  const Fan f = data_fan("p1xp1");
  auto v = support_function_test(f);
  ASSERT_TRUE(v.witness);
  (*v.witness)[0] += 100;
  EXPECT_FALSE(verify_verdict(f, v));
}

TEST(Projectivity, VerdictIndependentOfGaleBasis) {
  Rng rng(51);
  for (int t = 0; t < 12; ++t) {
    const Fan f = random_complete_fan3(7, rng);
    const auto g = gale_transform(f);
    const IntMatrix u = random_unimodular(g.dimension(), rng);
    const IntMatrix changed = u.transpose() * g.gale;
    EXPECT_EQ(shephard_by_oracle(f, changed), shephard_test(f).strongly_polytopal) << "trial " << t;
  }
}

TEST(Projectivity, ShephardAgreesWithSupportFunctionOnRandomFans) {
  Rng rng(52);
  int yes = 0, no = 0;
  for (int t = 0; t < 40; ++t) {
    const Fan f = random_complete_fan3(8, rng);
    const auto a = shephard_test(f);
    const auto b = support_function_test(f);
    EXPECT_EQ(a.strongly_polytopal, b.strongly_polytopal) << fan_to_json(f);
    EXPECT_TRUE(verify_verdict(f, a));
    EXPECT_TRUE(verify_verdict(f, b));
    (a.strongly_polytopal ? yes : no)++;
  }
  EXPECT_GT(yes, 0);
  EXPECT_GT(no, 0);
}

TEST(Projectivity, TwoExtraRaysAlwaysPolytopal) {
  Rng rng(53);
  for (int t = 0; t < 30; ++t) {
    const Fan f = random_kleinschmidt_fan(2 + t % 3, 4 + t % 3, rng);
    EXPECT_TRUE(shephard_test(f).strongly_polytopal);
    EXPECT_TRUE(support_function_test(f).strongly_polytopal);
  }
}

TEST(Projectivity, SystemMatchesOracleFeasibility) {
  Rng rng(54);
  for (int t = 0; t < 10; ++t) {
    const Fan f = random_complete_fan3(6, rng);
    const auto v = shephard_test(f);
    EXPECT_EQ(v.strongly_polytopal,
              oracle::strict_feasible(rows_of(v.system.equalities), {}, rows_of(v.system.strict),
                                      v.system.variables));
  }
}
