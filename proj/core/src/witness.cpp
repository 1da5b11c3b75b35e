#include "avoidance/witness.hpp"

#include <algorithm>
#include <cstdlib>

#include "avoidance/diagonals.hpp"
#include "avoidance/errors.hpp"

namespace avoidance {
namespace {

constexpr std::size_t kMaxPairSearch = 4096;
constexpr std::size_t kMaxConstantSearch = 64;

void require_c3(std::span<const ComplexHyperplane> hs, std::size_t count, const char* who) {
  if (hs.size() != count) {
    throw GeometryError(std::string(who) + " expects exactly " + std::to_string(count) +
                        " hyperplanes");
  }
  for (const auto& h : hs) {
    if (h.dimension() != 3) throw GeometryError(std::string(who) + " works in C^3");
  }
}

std::vector<ProjLine> project_all(std::span<const ComplexHyperplane> hs) {
  std::vector<ProjLine> out;
  for (const auto& h : hs) out.push_back(project_hyperplane(h));
  return out;
}

void require_general_position(std::span<const ComplexHyperplane> hs) {
  const auto lines = project_all(hs);
  if (!hyperplanes_in_general_position(lines)) {
    throw GeometryError("hyperplanes are not in general position");
  }
}

ExpSum point_term(const Gaussian& coordinate, const Poly& exponent) {
  return ExpSum::term(coordinate, exponent);
}

}  // namespace

Gaussian gaussian_at(std::size_t index) {
  if (index == 0) return Gaussian(0);
  std::size_t rest = index - 1;
  long h = 1;
  while (rest >= static_cast<std::size_t>(8 * h)) {
    rest -= static_cast<std::size_t>(8 * h);
    ++h;
  }
  std::vector<std::pair<long, long>> shell;
  for (long re = -h; re <= h; ++re) {
    for (long im = -h; im <= h; ++im) {
      if (std::max(std::labs(re), std::labs(im)) == h) shell.emplace_back(re, im);
    }
  }
  auto key = [](const std::pair<long, long>& g) {
    const auto [re, im] = g;
    return std::make_tuple(std::labs(re) + std::labs(im), -std::labs(re), re < 0, im < 0);
  };
  std::sort(shell.begin(), shell.end(),
            [&](const auto& a, const auto& b) { return key(a) < key(b); });
  const auto [re, im] = shell[rest];
  return Gaussian(Rational(re), Rational(im));
}

ExpAffineCurve witness_thm2i(std::span<const ComplexHyperplane> hs, const Poly& exponent) {
  if (hs.size() < 5) throw GeometryError("witness_thm2i expects at least 5 hyperplanes");
  std::vector<ProjLine> constraints;
  for (const auto& h : hs) {
    if (h.dimension() != 3) throw GeometryError("witness_thm2i works in C^3");
    auto l = project_hyperplane(h);
    if (std::find(constraints.begin(), constraints.end(), l) == constraints.end()) {
      constraints.push_back(std::move(l));
    }
  }
  for (std::size_t sum = 0; sum < kMaxPairSearch; ++sum) {
    for (std::size_t a = 0; a <= sum; ++a) {
      const ComplexVector v{Gaussian(1), gaussian_at(a), gaussian_at(sum - a)};
      const bool admissible = std::all_of(constraints.begin(), constraints.end(),
                                          [&](const ProjLine& l) {
                                            return !dot(l.coefficients(), v).is_zero();
                                          });
      if (admissible) return exp_times(exponent, v);
    }
  }
  throw ConstructionError("construction failed: no admissible (c2, c3) found");
}

Normalization normalize_four(std::span<const ComplexHyperplane> hs) {
  require_c3(hs, 4, "normalize_four");
  require_general_position(hs);
  const ComplexMatrix a(3, {hs[0].coefficients(), hs[1].coefficients(), hs[2].coefficients()});
  // L4 = sum_i lambda_i L_i; columns of the system are the first three forms.
  std::vector<ComplexVector> cols(3, ComplexVector(3));
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) cols[r][c] = a.at(c, r);
  }
  const auto lambda = solve_complex(ComplexMatrix(3, cols), hs[3].coefficients());
  if (!lambda) throw GeometryError("hyperplanes are not in general position");

  std::vector<ComplexVector> rows;
  std::vector<Gaussian> scales;
  for (std::size_t i = 0; i < 3; ++i) {
    ComplexVector row = a.rows()[i];
    for (auto& x : row) x *= (*lambda)[i];
    rows.push_back(std::move(row));
    scales.push_back((*lambda)[i].inverse());
  }
  scales.push_back(Gaussian(1));
  ComplexMatrix m(3, std::move(rows));
  ComplexMatrix m_inv = inverse(m);
  std::vector<ComplexHyperplane> standard{
      ComplexHyperplane({Gaussian(1), Gaussian(0), Gaussian(0)}),
      ComplexHyperplane({Gaussian(0), Gaussian(1), Gaussian(0)}),
      ComplexHyperplane({Gaussian(0), Gaussian(0), Gaussian(1)}),
      ComplexHyperplane({Gaussian(1), Gaussian(1), Gaussian(1)})};
  return Normalization{std::move(m), std::move(m_inv), std::move(scales), std::move(standard)};
}

Thm2iiWitness witness_thm2ii(std::span<const ComplexHyperplane> hs, const Poly& exponent) {
  if (exponent.is_constant()) throw GeometryError("witness exponent must be non-constant");
  Normalization norm = normalize_four(hs);

  const ComplexVector beta1{Gaussian(1), Gaussian(-1), Gaussian(0)};
  const ComplexVector beta2{Gaussian(1), Gaussian(0), Gaussian(-1)};
  RealSubspace normalized_h(
      {RealLinearForm::real_part_of(beta1), RealLinearForm::real_part_of(beta2)});
  // Re(beta . w) with w = M z is Re((beta^T M) . z).
  RealSubspace h({RealLinearForm::real_part_of(norm.change.pull_back(beta1)),
                  RealLinearForm::real_part_of(norm.change.pull_back(beta2))});

  ExpAffineCurve normalized_curve({ExpSum::term(Gaussian(1), exponent),
                                   ExpSum::term(Gaussian(-1), exponent),
                                   ExpSum::term(Gaussian(1), Gaussian(2) * exponent)});
  ExpAffineCurve curve = transform(norm.change_inverse, normalized_curve);
  return Thm2iiWitness{std::move(h), std::move(curve), std::move(norm), std::move(normalized_h),
                       std::move(normalized_curve)};
}

ExpAffineCurve witness_thm3_2(std::span<const ComplexHyperplane> hs, const RealSubspace& h,
                              HyperplanePair pair, const Poly& exponent) {
  require_c3(hs, 4, "witness_thm3_2");
  if (exponent.is_constant()) throw GeometryError("witness exponent must be non-constant");
  if (pair.j == pair.k || pair.j >= 4 || pair.k >= 4) {
    throw GeometryError("degenerate pair must name two distinct hyperplanes");
  }
  const ComplexHyperplane tilde = extract_complex_hyperplane(h);
  const ComplexVector& gamma = tilde.coefficients();
  const auto lines = project_all(hs);
  const auto diagonals = enumerate_diagonals(lines);

  {
    const ComplexMatrix m(3, {gamma, hs[pair.j].coefficients(), hs[pair.k].coefficients()});
    if (!determinant(m).is_zero()) {
      throw GeometryError("the complex part of H is in general position with H" +
                          std::to_string(pair.j + 1) + ", H" + std::to_string(pair.k + 1));
    }
  }

  // Candidate (P, Q) orientations: Q must lie on the complex part of H so that
  // the non-constant term drops out of the H-form. Requested pair first.
  struct Candidate {
    const DiagonalLine* diagonal;
    const ProjPoint* constant_point;  // P
    const ProjPoint* moving_point;    // Q
  };
  std::vector<Candidate> candidates;
  auto contains_pair = [&](const std::vector<std::size_t>& half) {
    return std::find(half.begin(), half.end(), pair.j) != half.end() &&
           std::find(half.begin(), half.end(), pair.k) != half.end();
  };
  for (const auto& d : diagonals) {
    if (contains_pair(d.partition.first())) candidates.push_back({&d, &d.q, &d.p});
    if (contains_pair(d.partition.second())) candidates.push_back({&d, &d.p, &d.q});
  }
  for (const auto& d : diagonals) {
    if (contains_pair(d.partition.first()) || contains_pair(d.partition.second())) continue;
    candidates.push_back({&d, &d.q, &d.p});
    candidates.push_back({&d, &d.p, &d.q});
  }

  std::string obstructed;
  for (const auto& cand : candidates) {
    const ComplexVector& p = cand.constant_point->coords();
    const ComplexVector& q = cand.moving_point->coords();
    if (!dot(gamma, q).is_zero()) continue;
    const Gaussian k = dot(gamma, p);
    if (k.is_zero()) {
      obstructed += " " + cand.diagonal->partition.label();
      continue;
    }
    for (std::size_t i = 0; i < kMaxConstantSearch; ++i) {
      const Poly c = Poly::constant(gaussian_at(i));
      if (real_part_kind(ExpSum::term(k, c)) != RealPartKind::NonzeroConstant) continue;
      std::vector<ExpSum> comps;
      for (std::size_t r = 0; r < 3; ++r) {
        comps.push_back(point_term(p[r], c) + point_term(q[r], exponent));
      }
      ExpAffineCurve f(std::move(comps));

      for (const auto& hk : hs) {
        if (is_nowhere_zero(apply_form(hk, f)) != NowhereZero::Yes) {
          throw ConstructionError("internal: diagonal curve meets a hyperplane");
        }
      }
      if (real_part_kind(apply_form(std::span<const Gaussian>(gamma), f)) !=
              RealPartKind::NonzeroConstant ||
          is_projectively_constant(f)) {
        throw ConstructionError("internal: diagonal curve fails its postconditions");
      }
      return f;
    }
  }
  throw ConstructionError(
      "construction failed: the complex hyperplane " + format_complex_form(gamma) +
      " = 0 inside H contains both endpoints of diagonal(s)" + obstructed +
      "; no curve on a diagonal keeps the H-form away from zero");
}

ExpAffineCurve witness_optimality(std::span<const ComplexHyperplane> hs, const RealSubspace& h,
                                  const Poly& exponent) {
  require_c3(hs, 3, "witness_optimality");
  if (exponent.is_constant()) throw GeometryError("witness exponent must be non-constant");
  std::vector<bool> seen(3, false);
  for (const auto& hk : hs) {
    bool matched = false;
    for (std::size_t axis = 0; axis < 3; ++axis) {
      ComplexVector e(3, Gaussian(0));
      e[axis] = Gaussian(1);
      if (hk.same_set(ComplexHyperplane(e)) && !seen[axis]) {
        seen[axis] = matched = true;
        break;
      }
    }
    if (!matched) throw GeometryError("witness_optimality expects the coordinate hyperplanes");
  }
  const RealSubspace expected({RealLinearForm({Rational(1), Rational(0), Rational(1), Rational(0),
                                               Rational(1), Rational(0)})});
  if (!h.same_subspace(expected)) {
    throw GeometryError("witness_optimality expects H = {x1 + x2 + x3 = 0}");
  }
  return ExpAffineCurve({ExpSum::constant(Gaussian(1)), ExpSum::term(Gaussian(1), exponent),
                         ExpSum::term(Gaussian(-1), exponent)});
}

}  // namespace avoidance
