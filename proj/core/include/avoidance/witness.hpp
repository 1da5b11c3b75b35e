#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "avoidance/arrangement.hpp"
#include "avoidance/exp_sum.hpp"

namespace avoidance {

/// The i-th Gaussian integer in the fixed search order
/// 0, 1, -1, i, -i, 1+i, 1-i, -1+i, -1-i, 2, -2, 2i, -2i, ...
/// (by max(|re|, |im|), then |re| + |im|, then |re| descending, positive
/// real part first, positive imaginary part first).
Gaussian gaussian_at(std::size_t index);

/// f = (e^h, c2 e^h, c3 e^h) with (c2, c3) the first pair, in diagonal order
/// over gaussian_at, satisfying alpha_1 + alpha_2 c2 + alpha_3 c3 != 0 for
/// every hyperplane. Needs at least 5 hyperplanes of C^3.
ExpAffineCurve witness_thm2i(std::span<const ComplexHyperplane> hs,
                             const Poly& exponent = Poly::identity());

/// Linear change of coordinates w = M z taking four hyperplanes in general
/// position to w1, w2, w3, w1 + w2 + w3: for each k, L_k(z) = scales[k] * S_k(M z).
struct Normalization {
  ComplexMatrix change;
  ComplexMatrix change_inverse;
  std::vector<Gaussian> scales;
  std::vector<ComplexHyperplane> standard_forms;
};

/// Throws GeometryError unless every three of the four forms have rank 3.
Normalization normalize_four(std::span<const ComplexHyperplane> hs);

struct Thm2iiWitness {
  RealSubspace h;
  ExpAffineCurve curve;
  Normalization normalization;
  RealSubspace normalized_h;
  ExpAffineCurve normalized_curve;
};

/// In normalized coordinates H = {x1 - x2 = 0, x1 - x3 = 0} and
/// f = (e^h, -e^h, e^{2h}); both are pulled back to the input coordinates.
Thm2iiWitness witness_thm2ii(std::span<const ComplexHyperplane> hs,
                             const Poly& exponent = Poly::identity());

/// Index pair (0-based) of two of the four hyperplanes.
struct HyperplanePair {
  std::size_t j;
  std::size_t k;
};

/// Curve for a real hyperplane H whose complex part passes through
/// Q = H_j /\ H_k: f = e^c P + e^{q} Q where P is the opposite point of the
/// diagonal through Q. Tries `pair` first, then the other diagonals. Throws
/// ConstructionError when every diagonal is obstructed.
ExpAffineCurve witness_thm3_2(std::span<const ComplexHyperplane> hs, const RealSubspace& h,
                              HyperplanePair pair, const Poly& exponent = Poly::identity());

/// f = (1, e^h, -e^h) for H1, H2, H3 = {z1, z2, z3 = 0} (in any order) and
/// H = {x1 + x2 + x3 = 0}. Throws GeometryError for any other configuration.
ExpAffineCurve witness_optimality(std::span<const ComplexHyperplane> hs, const RealSubspace& h,
                                  const Poly& exponent = Poly::identity());

}  // namespace avoidance
