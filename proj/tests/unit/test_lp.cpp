#include "oracles.hpp"

#include "toriclab/lp.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace toriclab;

namespace {

RatVector random_row(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  RatVector r(n);
  for (auto& x : r) x = d(rng);
  return r;
}

oracle::Rows rows_of(const RatMatrix& m) {
  oracle::Rows out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row_vector(i));
  return out;
}

}  // namespace

TEST(StrictLp, AgreesWithFourierMotzkin) {
  std::mt19937_64 rng(21);
  int feasible = 0, infeasible = 0;
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = 2 + t % 4;
    LinearSystem sys(n);
    for (int i = 0; i < t % 2; ++i) sys.add_equality(random_row(rng, n, -2, 2));
    for (int i = 0; i < (t / 2) % 3; ++i) sys.add_nonstrict(random_row(rng, n, -2, 2));
    for (int i = 0; i < 1 + (t / 6) % 5; ++i) sys.add_strict(random_row(rng, n, -2, 2));
    const auto out = strict_lp_feasibility(sys);
    const bool expected = oracle::strict_feasible(rows_of(sys.equalities), rows_of(sys.nonstrict),
                                                  rows_of(sys.strict), n);
    ASSERT_EQ(out.feasible(), expected) << "trial " << t;
    if (out.feasible()) {
      ++feasible;
      ASSERT_TRUE(out.witness);
      EXPECT_TRUE(verify_witness(sys, *out.witness));
    } else {
      ++infeasible;
      ASSERT_TRUE(out.certificate);
      EXPECT_TRUE(verify_certificate(sys, *out.certificate));
    }
  }
  // Both outcomes are exercised.
  EXPECT_GT(feasible, 50);
  EXPECT_GT(infeasible, 50);
}

TEST(StrictLp, WitnessNormalisation) {
  LinearSystem sys(2);
  sys.add_strict(RatVector{Rational(1), Rational(0)});
  sys.add_strict(RatVector{Rational(0), Rational(1)});
  sys.add_equality(RatVector{Rational(1), Rational(-2)});
  const auto out = strict_lp_feasibility(sys);
  ASSERT_TRUE(out.feasible());
  const auto& x = *out.witness;
  EXPECT_EQ(x[0], 2 * x[1]);
  EXPECT_GE(x[1], 1);
}

TEST(StrictLp, ContradictionHasCertificate) {
  // x > 0 and -x > 0.
  LinearSystem sys(1);
  sys.add_strict(RatVector{Rational(1)});
  sys.add_strict(RatVector{Rational(-1)});
  const auto out = strict_lp_feasibility(sys);
  ASSERT_FALSE(out.feasible());
  EXPECT_EQ(out.certificate->size(), 2u);
  EXPECT_EQ((*out.certificate)[0], (*out.certificate)[1]);
  EXPECT_TRUE(verify_certificate(sys, *out.certificate));
}

TEST(StrictLp, EqualityForcedContradiction) {
  // x = y, x - y > 0.
  LinearSystem sys(2);
  sys.add_equality(RatVector{Rational(1), Rational(-1)});
  sys.add_strict(RatVector{Rational(1), Rational(-1)});
  const auto out = strict_lp_feasibility(sys);
  ASSERT_FALSE(out.feasible());
  EXPECT_TRUE(verify_certificate(sys, *out.certificate));
}

TEST(StrictLp, NoStrictRowsIsFeasible) {
  LinearSystem sys(3);
  sys.add_equality(RatVector{Rational(1), Rational(1), Rational(1)});
  EXPECT_TRUE(strict_lp_feasibility(sys).feasible());
}

TEST(StrictLp, TamperedCertificatesAreRejected) {
  LinearSystem sys(1);
  sys.add_strict(RatVector{Rational(1)});
  sys.add_strict(RatVector{Rational(-1)});
  EXPECT_FALSE(verify_certificate(sys, RatVector{Rational(1), Rational(2)}));
  EXPECT_FALSE(verify_certificate(sys, RatVector{Rational(-1), Rational(-1)}));
  EXPECT_FALSE(verify_certificate(sys, RatVector{Rational(0), Rational(0)}));
  EXPECT_FALSE(verify_witness(sys, RatVector{Rational(1)}));
}

TEST(NonnegativeSolution, FindsAndRefutes) {
  const RatMatrix a = to_rational(IntMatrix{{1, 1, 0}, {0, 1, 1}});
  const RatVector b = {Rational(2), Rational(3)};
  const auto x = nonnegative_solution(a, b);
  ASSERT_TRUE(x);
  for (const auto& v : *x) EXPECT_GE(v, 0);
  EXPECT_EQ((*x)[0] + (*x)[1], 2);
  EXPECT_EQ((*x)[1] + (*x)[2], 3);
  const RatVector neg = {Rational(-1), Rational(3)};
  EXPECT_FALSE(nonnegative_solution(a, neg));
}
