#include <gtest/gtest.h>

#include "avoidance/classifier.hpp"
#include "avoidance/errors.hpp"
#include "random_exact.hpp"

namespace avoidance {
namespace {

ComplexHyperplane hyperplane(long a, long b, long c) {
  return ComplexHyperplane({Gaussian(a), Gaussian(b), Gaussian(c)});
}

std::vector<ComplexHyperplane> standard_four() {
  return {hyperplane(1, 0, 0), hyperplane(0, 1, 0), hyperplane(0, 0, 1), hyperplane(1, 1, 1)};
}

RealSubspace real_hyperplane(std::initializer_list<long> xs) {
  RealVector v;
  for (long x : xs) v.push_back(Rational(x));
  return RealSubspace({RealLinearForm(v)});
}

TEST(Classify, GenericComplexPartMeansConstant) {
  const Verdict v = classify(standard_four(), real_hyperplane({1, 0, 2, 0, 3, 0}));
  EXPECT_EQ(v.tag, VerdictTag::AllCurvesConstant);
  ASSERT_EQ(v.evidence.size(), 6u);
  for (const auto& t : v.evidence) EXPECT_EQ(t.rank, 6u);
  EXPECT_FALSE(v.witness);
  EXPECT_FALSE(v.report);
}

TEST(Classify, ComplexPartEqualToH1) {
  const Verdict v = classify(standard_four(), real_hyperplane({1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(v.tag, VerdictTag::WitnessExists);
  EXPECT_TRUE(v.complex_part.same_set(hyperplane(1, 0, 0)));
  for (const auto& t : v.evidence) EXPECT_EQ(t.rank, t.j == 0 ? 4u : 6u);
  ASSERT_TRUE(v.witness);
  ASSERT_TRUE(v.report);
  EXPECT_TRUE(v.report->all_avoided());
  EXPECT_FALSE(v.report->projection_constant);
  EXPECT_FALSE(v.obstruction);
}

TEST(Classify, ComplexPartOnADiagonalKeepsTheTagButHasNoWitness) {
  const Verdict v = classify(standard_four(), real_hyperplane({1, 0, 1, 0, 0, 0}));
  EXPECT_EQ(v.tag, VerdictTag::WitnessExists);
  EXPECT_FALSE(v.witness);
  ASSERT_TRUE(v.obstruction);
  EXPECT_NE(v.obstruction->find("construction failed"), std::string::npos);
}

TEST(Classify, PreconditionErrors) {
  auto repeated = standard_four();
  repeated[3] = hyperplane(2, 0, 0);
  EXPECT_THROW(classify(repeated, real_hyperplane({1, 0, 0, 0, 0, 0})), GeometryError);
  EXPECT_THROW(classify(standard_four(), realify(hyperplane(1, 0, 0))), GeometryError);
  auto three = standard_four();
  three.pop_back();
  EXPECT_THROW(classify(three, real_hyperplane({1, 0, 0, 0, 0, 0})), GeometryError);
  auto dependent = standard_four();
  dependent[3] = hyperplane(1, 1, 0);
  EXPECT_THROW(classify(dependent, real_hyperplane({1, 0, 0, 0, 0, 0})), GeometryError);
}

TEST(Classify, TagMatchesIndependentDeterminantTest) {
  testing::ExactRng rng(71);
  SamplingPlan plan;
  plan.grid_points = 31;
  plan.random_points = 1000;
  for (int trial = 0; trial < 40; ++trial) {
    const auto hs = testing::random_gp_hyperplanes(rng, 4, 3);
    RealVector ab;
    if (trial % 2 == 0) {
      ab = rng.nonzero_real_vector(6);
    } else {
      const Gaussian lambda = rng.gaussian();
      const Gaussian mu = rng.gaussian();
      ComplexVector gamma;
      for (std::size_t r = 0; r < 3; ++r) gamma.push_back(lambda * hs[0].coefficients()[r] + mu * hs[2].coefficients()[r]);
      if (is_zero(gamma)) continue;
      ab = RealLinearForm::real_part_of(gamma).coefficients();
    }
    const RealSubspace h({RealLinearForm(ab)});
    const ComplexVector gamma = {Gaussian(ab[0], -ab[1]), Gaussian(ab[2], -ab[3]), Gaussian(ab[4], -ab[5])};
    bool degenerate = false;
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t k = j + 1; k < 4; ++k) {
        const ComplexMatrix m({gamma, hs[j].coefficients(), hs[k].coefficients()});
        degenerate = degenerate || determinant(m).is_zero();
      }
    }
    const Verdict v = classify(hs, h, plan);
    ASSERT_EQ(v.tag == VerdictTag::WitnessExists, degenerate);
    if (v.witness) {
      ASSERT_TRUE(v.report->all_avoided());
      ASSERT_FALSE(v.report->projection_constant);
    }
  }
}

}  // namespace
}  // namespace avoidance
