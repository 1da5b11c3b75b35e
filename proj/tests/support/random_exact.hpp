#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "avoidance/projective.hpp"
#include "avoidance/rational.hpp"

namespace avoidance::testing {

// Small random rationals and Gaussian rationals for property tests.
class ExactRng {
 public:
  explicit ExactRng(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long span = 9, long max_den = 5) {
    return make_rational(integer(-span, span), integer(1, max_den));
  }

  Gaussian gaussian(long span = 9, long max_den = 5) {
    return Gaussian(rational(span, max_den), rational(span, max_den));
  }

  // Mostly sparse entries so that rank deficiencies actually occur.
  Rational sparse_rational() { return integer(0, 2) == 0 ? Rational(0) : rational(3, 2); }

  ComplexVector gaussian_vector(std::size_t n) {
    ComplexVector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(gaussian());
    return v;
  }

  ComplexVector nonzero_gaussian_vector(std::size_t n) {
    while (true) {
      auto v = gaussian_vector(n);
      if (!is_zero(v)) return v;
    }
  }

  RealVector real_vector(std::size_t n) {
    RealVector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational());
    return v;
  }

  RealVector nonzero_real_vector(std::size_t n) {
    while (true) {
      auto v = real_vector(n);
      if (!is_zero(v)) return v;
    }
  }

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// n+1 hyperplanes of C^{n+1} drawn until every n+1 of them are independent.
inline std::vector<ComplexHyperplane> random_gp_hyperplanes(ExactRng& rng, std::size_t count,
                                                            std::size_t dim) {
  while (true) {
    std::vector<ComplexHyperplane> hs;
    std::vector<ProjLine> ls;
    for (std::size_t i = 0; i < count; ++i) {
      hs.emplace_back(rng.nonzero_gaussian_vector(dim));
      ls.emplace_back(hs.back().coefficients());
    }
    if (hyperplanes_in_general_position(ls)) return hs;
  }
}

}  // namespace avoidance::testing
