#include <gtest/gtest.h>

#include <algorithm>

#include "avoidance/arrangement.hpp"
#include "avoidance/errors.hpp"
#include "random_exact.hpp"

namespace avoidance {
namespace {

RealLinearForm form(std::initializer_list<long> xs) {
  RealVector v;
  for (long x : xs) v.push_back(Rational(x));
  return RealLinearForm(v);
}

ComplexHyperplane hyperplane(long a, long b, long c) {
  return ComplexHyperplane({Gaussian(a), Gaussian(b), Gaussian(c)});
}

RealSubspace real_hyperplane(const RealVector& coefficients) {
  return RealSubspace({RealLinearForm(coefficients)});
}

// Sum over j of a_j Re(c_j w) + b_j Im(c_j w), c_1 = 1.
Rational direct_evaluation(const RealVector& ab, const Gaussian& c2, const Gaussian& c3, const Gaussian& w) {
  const Gaussian cs[3] = {Gaussian(1), c2, c3};
  Rational s = 0;
  for (std::size_t j = 0; j < 3; ++j) {
    const Gaussian cw = cs[j] * w;
    s += ab[2 * j] * cw.re + ab[2 * j + 1] * cw.im;
  }
  return s;
}

TEST(Realify, CoordinateHyperplane) {
  EXPECT_TRUE(realify(hyperplane(1, 0, 0)).same_subspace(
      RealSubspace({form({1, 0, 0, 0, 0, 0}), form({0, 1, 0, 0, 0, 0})})));
}

TEST(Realify, SumHyperplane) {
  EXPECT_TRUE(realify(hyperplane(1, 1, 1)).same_subspace(
      RealSubspace({form({1, 0, 1, 0, 1, 0}), form({0, 1, 0, 1, 0, 1})})));
}

TEST(Realify, ScalingByIKeepsTheSubspace) {
  const ComplexHyperplane iz1({Gaussian::i(), Gaussian(0), Gaussian(0)});
  EXPECT_TRUE(realify(iz1).same_subspace(realify(hyperplane(1, 0, 0))));
  EXPECT_EQ(realify(iz1).dimension(), 4u);
}

TEST(Realify, MembershipMatchesComplexEvaluation) {
  testing::ExactRng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const ComplexHyperplane h(rng.nonzero_gaussian_vector(3));
    ComplexVector z = {rng.gaussian(), rng.gaussian(), Gaussian(0)};
    const auto& a = h.coefficients();
    if (a[2].is_zero()) continue;
    z[2] = -(a[0] * z[0] + a[1] * z[1]) / a[2];
    RealVector x;
    for (const auto& c : z) {
      x.push_back(c.re);
      x.push_back(c.im);
    }
    ASSERT_TRUE(realify(h).contains(x));
    const auto lead = static_cast<std::size_t>(
        std::find_if(a.begin(), a.end(), [](const Gaussian& g) { return !g.is_zero(); }) - a.begin());
    x[2 * lead] += 1;
    ASSERT_FALSE(realify(h).contains(x));
  }
}

TEST(RealSubspaceTest, DependentFormsRejected) {
  EXPECT_THROW(RealSubspace({form({1, 0, 0, 0, 0, 0}), form({2, 0, 0, 0, 0, 0})}), GeometryError);
  EXPECT_THROW(form({0, 0, 0, 0, 0, 0}), GeometryError);
}

TEST(TripleGeneralPosition, Examples) {
  EXPECT_TRUE(triple_in_general_position(realify(hyperplane(1, 0, 0)), realify(hyperplane(0, 1, 0)),
                                         realify(hyperplane(0, 0, 1))));
  EXPECT_FALSE(triple_in_general_position(realify(hyperplane(1, 0, 0)), realify(hyperplane(0, 1, 0)),
                                          realify(hyperplane(1, 1, 0))));
  EXPECT_EQ(triple_span_rank(realify(hyperplane(1, 0, 0)), realify(hyperplane(0, 1, 0)),
                             realify(hyperplane(1, 1, 0))),
            4u);
}

// H-perp only has x-directions, so with any two coordinate-type complements
// one y-direction is always missing: rank 5, not 6.
TEST(TripleGeneralPosition, RealSubspaceOfTheTwoWitnessMissesADirection) {
  const RealSubspace h({form({1, 0, -1, 0, 0, 0}), form({1, 0, 0, 0, -1, 0})});
  const std::vector<ComplexHyperplane> hs = {hyperplane(1, 0, 0), hyperplane(0, 1, 0), hyperplane(0, 0, 1),
                                             hyperplane(1, 1, 1)};
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = j + 1; k < 4; ++k) {
      EXPECT_EQ(triple_span_rank(h, realify(hs[j]), realify(hs[k])), 5u) << j << k;
      EXPECT_FALSE(triple_in_general_position(h, realify(hs[j]), realify(hs[k])));
    }
  }
}

TEST(TripleGeneralPosition, WrongDimensionThrows) {
  const RealSubspace five({form({1, 0, 0, 0, 0, 0})});
  EXPECT_THROW(triple_in_general_position(five, realify(hyperplane(0, 1, 0)), realify(hyperplane(0, 0, 1))),
               GeometryError);
}

TEST(FamilyGeneralPosition, Examples) {
  std::vector<RealSubspace> standard = {realify(hyperplane(1, 0, 0)), realify(hyperplane(0, 1, 0)),
                                        realify(hyperplane(0, 0, 1)), realify(hyperplane(1, 1, 1))};
  EXPECT_TRUE(family_in_general_position(standard));

  std::vector<RealSubspace> repeated = {realify(hyperplane(1, 0, 0)), realify(hyperplane(2, 0, 0)),
                                        realify(hyperplane(0, 0, 1))};
  EXPECT_FALSE(family_in_general_position(repeated));

  std::vector<RealSubspace> dependent = {realify(hyperplane(1, 0, 0)), realify(hyperplane(0, 1, 0)),
                                         realify(hyperplane(1, 1, 0)), realify(hyperplane(0, 0, 1))};
  EXPECT_FALSE(family_in_general_position(dependent));

  std::vector<RealSubspace> two = {realify(hyperplane(1, 0, 0)), realify(hyperplane(0, 1, 0))};
  EXPECT_THROW(family_in_general_position(two), GeometryError);
}

TEST(Extract, Examples) {
  EXPECT_EQ(extract_complex_hyperplane(RealSubspace({form({1, 0, 0, 0, 0, 0})})), hyperplane(1, 0, 0));
  EXPECT_EQ(extract_complex_hyperplane(RealSubspace({form({1, 0, 1, 0, 1, 0})})), hyperplane(1, 1, 1));
  const ComplexHyperplane from_y1 = extract_complex_hyperplane(RealSubspace({form({0, 1, 0, 0, 0, 0})}));
  EXPECT_EQ(from_y1, ComplexHyperplane({-Gaussian::i(), Gaussian(0), Gaussian(0)}));
  EXPECT_TRUE(from_y1.same_set(hyperplane(1, 0, 0)));
}

TEST(Extract, WrongDimensionThrows) {
  EXPECT_THROW(extract_complex_hyperplane(realify(hyperplane(1, 0, 0))), GeometryError);
}

TEST(Extract, ContainedAndUniqueOnRandomInputs) {
  testing::ExactRng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const RealSubspace h = real_hyperplane(rng.nonzero_real_vector(6));
    const ComplexHyperplane tilde = extract_complex_hyperplane(h);
    ASSERT_TRUE(h.contains_subspace(realify(tilde)));
    ASSERT_EQ(realify(tilde).dimension(), 4u);
    // Falsification attempt over a small grid of other complex hyperplanes.
    for (long a = -1; a <= 1; ++a) {
      for (long b = -1; b <= 1; ++b) {
        for (long c = -1; c <= 1; ++c) {
          if (a == 0 && b == 0 && c == 0) continue;
          for (const Gaussian& s : {Gaussian(1), Gaussian::i()}) {
            const ComplexHyperplane k({s * Gaussian(a), Gaussian(b), Gaussian(c)});
            if (h.contains_subspace(realify(k))) ASSERT_TRUE(k.same_set(tilde));
          }
        }
      }
    }
  }
}

TEST(Collapse, Examples) {
  const RealSubspace x1({form({1, 0, 0, 0, 0, 0})});
  const Gaussian c2(Rational(3), Rational(-2));
  const Gaussian c3(make_rational(1, 2), Rational(5));
  const auto r1 = collapse_real_form(x1, c2, c3);
  EXPECT_EQ(r1.a, Rational(1));
  EXPECT_EQ(r1.b, Rational(0));
  const auto r2 = collapse_real_form(RealSubspace({form({0, 1, 0, 0, 0, 0})}), Gaussian(0), Gaussian(0));
  EXPECT_EQ(r2.a, Rational(0));
  EXPECT_EQ(r2.b, Rational(1));
}

TEST(Collapse, MatchesTheSixTermEvaluation) {
  testing::ExactRng rng(33);
  for (int trial = 0; trial < 10000; ++trial) {
    const RealVector ab = rng.nonzero_real_vector(6);
    const Gaussian c2 = rng.gaussian();
    const Gaussian c3 = rng.gaussian();
    const Gaussian w = rng.gaussian();
    const auto r = collapse_real_form(real_hyperplane(ab), c2, c3);
    ASSERT_EQ(r.evaluate(w), direct_evaluation(ab, c2, c3, w));
    ASSERT_EQ(r.zero_set() == CollapsedRealForm::ZeroSet::Plane, sgn(r.a) == 0 && sgn(r.b) == 0);
  }
}

TEST(Collapse, DegenerateCaseIsThePlane) {
  // a = b = 0 exactly when (1, c2, c3) lies on the complex hyperplane.
  const RealSubspace h({form({1, 0, -1, 0, 0, 0})});
  const auto r = collapse_real_form(h, Gaussian(1), Gaussian(7));
  EXPECT_EQ(r.zero_set(), CollapsedRealForm::ZeroSet::Plane);
  EXPECT_EQ(collapse_real_form(h, Gaussian(2), Gaussian(7)).zero_set(), CollapsedRealForm::ZeroSet::Line);
}

TEST(RealFormText, Formats) {
  EXPECT_EQ(to_string(form({1, 0, -1, 0, 0, 0})), "x1 - x2");
  EXPECT_EQ(to_string(form({0, 2, 0, 0, 0, -1})), "2*y1 - y3");
}

}  // namespace
}  // namespace avoidance
