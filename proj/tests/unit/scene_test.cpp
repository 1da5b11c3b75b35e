#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "avoidance/errors.hpp"
#include "avoidance/scene.hpp"

namespace avoidance {
namespace {

std::vector<std::filesystem::path> corpus() {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(AVOIDANCE_CORPUS_DIR)) {
    if (entry.path().extension() == ".scene") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void expect_parse_error(const std::string& text, std::size_t line, std::size_t column) {
  try {
    parse_scene(text);
    FAIL() << "no error for: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

TEST(ParseScene, StandardHyperplane) {
  const Scene s = parse_scene("hyperplane H4: z1 + z2 + z3 = 0\n");
  ASSERT_EQ(s.hyperplanes.size(), 1u);
  EXPECT_EQ(s.hyperplanes[0].name, "H4");
  EXPECT_EQ(s.hyperplanes[0].value.coefficients(), (ComplexVector{Gaussian(1), Gaussian(1), Gaussian(1)}));
}

TEST(ParseScene, RealSubspaceOfDimensionFour) {
  const Scene s = parse_scene("real H: x1 - x2 = 0; x1 - x3 = 0");
  ASSERT_EQ(s.real_subspaces.size(), 1u);
  EXPECT_EQ(s.real_subspaces[0].value.dimension(), 4u);
}

TEST(ParseScene, ComplexRationalCoefficient) {
  const Scene s = parse_scene("hyperplane B: (1/2 - 3i)*z2 = 0");
  EXPECT_EQ(s.hyperplanes[0].value.coefficients(),
            (ComplexVector{Gaussian(0), Gaussian(make_rational(1, 2), Rational(-3)), Gaussian(0)}));
}

TEST(ParseScene, Curves) {
  const Scene s = parse_scene("curve f: (exp(z), -exp(z), exp(2*z))");
  const Poly z = Poly::identity();
  EXPECT_EQ(s.curve("f"), ExpAffineCurve({ExpSum::term(Gaussian(1), z), ExpSum::term(Gaussian(-1), z),
                                          ExpSum::term(Gaussian(1), Gaussian(2) * z)}));
  EXPECT_THROW(s.curve("g"), std::out_of_range);
}

TEST(ParseScene, AmbientIsInferredOrDeclared) {
  EXPECT_EQ(parse_scene("hyperplane A: z5 = 0").ambient, 5u);
  EXPECT_EQ(parse_scene("ambient 4\nhyperplane A: z1 = 0").ambient, 4u);
  EXPECT_EQ(parse_scene("hyperplane A: z1 = 0").hyperplanes[0].value.dimension(), 3u);
}

TEST(ParseScene, Errors) {
  expect_parse_error("hyperplane H: z1 + = 0", 1, 20);
  expect_parse_error("hyperplane H: z1 - z1 = 0", 1, 15);
  expect_parse_error("hyperplane H: z1 = 0\nhyperplane H: z2 = 0", 2, 12);
  expect_parse_error("\nreal R: i*x1 = 0", 2, 9);
  expect_parse_error("real R: x1 = 0; 2*x1 = 0", 1, 6);
  expect_parse_error("curve f: (exp(z), 1)", 1, 10);
  expect_parse_error("hyperplane H: z1 = 1", 1, 20);
  expect_parse_error("hyperplane H: z1 * z2 = 0", 1, 20);
  expect_parse_error("hyperplane H: x1 = 0", 1, 15);
  expect_parse_error("plane H: z1 = 0", 1, 1);
  expect_parse_error("hyperplane H: z1 = 0 $", 1, 22);
  expect_parse_error("hyperplane H: 1/0 z1 = 0", 1, 17);
  expect_parse_error("ambient 2\nhyperplane H: z3 = 0", 2, 15);
}

TEST(ParseScene, NamesMustBeUniqueAcrossKinds) {
  EXPECT_THROW(parse_scene("hyperplane A: z1 = 0\nreal A: x1 = 0"), ParseError);
  EXPECT_THROW(parse_scene("curve A: (1, 1, 1)\ncurve A: (1, 1, 1)"), ParseError);
}

TEST(ParseScene, MissingFileIsAParseError) {
  EXPECT_THROW(load_scene("/nonexistent/scene.file"), ParseError);
}

TEST(LinearForms, CanonicalPrintParseIsIdentity) {
  for (const char* text : {"z1 + z2 + z3", "(1/2-3i)*z2", "2*z1 - i*z3 + z1", "-z3 + 3/4*z2"}) {
    const auto e = parse_linear_form(text, FormKind::Complex);
    EXPECT_EQ(parse_linear_form(to_string(e), FormKind::Complex), e) << text;
  }
  for (const char* text : {"x1 - x2", "y3 + 2*x1", "-1/2*y1"}) {
    const auto e = parse_linear_form(text, FormKind::Real);
    EXPECT_EQ(parse_linear_form(to_string(e), FormKind::Real), e) << text;
  }
  EXPECT_EQ(to_string(parse_linear_form("z2 + z1 + z1", FormKind::Complex)), "2*z1 + z2");
}

TEST(Constants, ParseGaussianAndPoly) {
  EXPECT_EQ(parse_gaussian("1/2 - 3i"), Gaussian(make_rational(1, 2), Rational(-3)));
  EXPECT_EQ(parse_gaussian("-i"), -Gaussian::i());
  EXPECT_EQ(parse_poly("2*z^2 + i*z"), Poly({Gaussian(0), Gaussian::i(), Gaussian(2)}));
  EXPECT_THROW(parse_gaussian("z1"), ParseError);
}

TEST(Corpus, HasAtLeastTwentyScenes) { EXPECT_GE(corpus().size(), 20u); }

TEST(Corpus, PrintParseFixpoint) {
  for (const auto& path : corpus()) {
    const Scene s = load_scene(path);
    const std::string printed = print_scene(s);
    const Scene again = parse_scene(printed);
    EXPECT_EQ(again, s) << path << "\n" << printed;
    EXPECT_EQ(print_scene(again), printed) << path;
  }
}

}  // namespace
}  // namespace avoidance
