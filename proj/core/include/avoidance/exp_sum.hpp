#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "avoidance/exact_linalg.hpp"
#include "avoidance/projective.hpp"

namespace avoidance {

using Complex = std::complex<double>;

/// Polynomial in the curve parameter z with Q(i) coefficients, ascending
/// powers, trailing zeros stripped (the zero polynomial has no coefficients).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Gaussian> ascending);

  static Poly constant(const Gaussian& c) { return Poly({c}); }
  /// p(z) = z.
  static Poly identity() { return Poly({Gaussian(0), Gaussian(1)}); }

  const std::vector<Gaussian>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Gaussian constant_term() const { return coeffs_.empty() ? Gaussian(0) : coeffs_.front(); }
  /// p - p(0).
  Poly non_constant_part() const;
  Poly conj() const;

  Complex evaluate(Complex z) const;
  Complex evaluate_derivative(Complex z) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Gaussian& s, const Poly& p);

  friend bool operator==(const Poly&, const Poly&) = default;
  /// Degree first, then coefficients from the top down.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

 private:
  std::vector<Gaussian> coeffs_;
};

/// "2*z^2 + (1-i)*z + 1/2" in the scene grammar.
std::string to_string(const Poly& p);

/// z -> coefficient * exp(exponent(z)).
struct ExpPoly {
  Gaussian coefficient;
  Poly exponent;

  friend bool operator==(const ExpPoly&, const ExpPoly&) = default;
};

/// Finite sum of ExpPoly terms in canonical form: terms sorted by exponent,
/// equal exponents merged, zero coefficients dropped. The empty sum is the
/// zero function.
///
/// For Q(i) coefficients and exponents, exp(p_1), ..., exp(p_k) with pairwise
/// distinct p_i are linearly independent over the algebraic numbers (distinct
/// non-constant parts: classical; equal non-constant parts: Lindemann-
/// Weierstrass on the constant terms). Structural emptiness is therefore the
/// exact zero test.
class ExpSum {
 public:
  ExpSum() = default;
  explicit ExpSum(std::vector<ExpPoly> terms);

  static ExpSum term(const Gaussian& c, const Poly& p) { return ExpSum({ExpPoly{c, p}}); }
  static ExpSum constant(const Gaussian& c) { return term(c, Poly()); }

  const std::vector<ExpPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Every exponent is a constant polynomial (the function is constant).
  bool is_constant() const;

  /// Groups terms by the non-constant part of their exponent; each value is
  /// the remaining constant factor as a sum of exp(constant) terms.
  std::map<Poly, ExpSum> classes() const;

  /// Complex conjugate of a constant sum. Throws GeometryError if non-constant.
  ExpSum conjugate_constant() const;

  Complex evaluate(Complex z) const;

  ExpSum& operator+=(const ExpSum& o);
  friend ExpSum operator+(ExpSum a, const ExpSum& b) { return a += b; }
  friend ExpSum operator-(const ExpSum& a, const ExpSum& b);
  friend ExpSum operator*(const Gaussian& s, const ExpSum& e);
  /// exp(p) exp(q) = exp(p + q).
  friend ExpSum operator*(const ExpSum& a, const ExpSum& b);

  friend bool operator==(const ExpSum&, const ExpSum&) = default;

 private:
  std::vector<ExpPoly> terms_;
};

/// Scene-grammar rendering: "exp(z)", "-2*exp(z^2)", "1 + exp(z)", "0".
std::string to_string(const ExpSum& s);

bool is_identically_zero(const ExpSum& s);

enum class NowhereZero { Yes, No, Unknown };

/// Yes when s = K exp(q) for one non-constant part q (K is then nonzero by
/// linear independence); No when s is the zero function; Unknown otherwise.
NowhereZero is_nowhere_zero(const ExpSum& s);

/// a = lambda b for a constant lambda (both nonzero).
bool proportional(const ExpSum& a, const ExpSum& b);

/// Exact decision about Re(s) for constant sums.
enum class RealPartKind { IdenticallyZero, NonzeroConstant, NonConstant };
RealPartKind real_part_kind(const ExpSum& s);

/// Entire curve C -> C^m whose components are exponential sums.
class ExpAffineCurve {
 public:
  /// Throws GeometryError if every component is the zero function.
  explicit ExpAffineCurve(std::vector<ExpSum> components);

  const std::vector<ExpSum>& components() const { return components_; }
  std::size_t dimension() const { return components_.size(); }

  std::vector<Complex> evaluate(Complex z) const;

  /// f(z) e^{-m} and f'(z) e^{-m}, where m is the largest real part among all
  /// exponents at z. Membership in linear sets is unchanged by the positive
  /// factor and the values stay finite for large |z|.
  struct Scaled {
    std::vector<Complex> value;
    std::vector<Complex> derivative;
  };
  Scaled evaluate_scaled(Complex z) const;

  friend bool operator==(const ExpAffineCurve&, const ExpAffineCurve&) = default;

 private:
  std::vector<ExpSum> components_;
};

/// "(exp(z), -exp(z), exp(2*z))".
std::string to_string(const ExpAffineCurve& f);

/// sum_i a_i f_i as a canonical exponential sum.
ExpSum apply_form(std::span<const Gaussian> coefficients, const ExpAffineCurve& f);
ExpSum apply_form(const ComplexHyperplane& h, const ExpAffineCurve& f);
ExpSum apply_form(const ProjLine& l, const ExpAffineCurve& f);

/// pi(f) is constant, i.e. all nonzero components are pairwise proportional.
/// For single-term components c_i exp(p_i) this is: every p_i - p_j is constant.
bool is_projectively_constant(const ExpAffineCurve& f);

/// z -> M f(z).
ExpAffineCurve transform(const ComplexMatrix& m, const ExpAffineCurve& f);

/// exp(h) * v for a fixed vector v.
ExpAffineCurve exp_times(const Poly& h, const ComplexVector& v);

}  // namespace avoidance
