#pragma once

#include <complex>
#include <compare>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace avoidance {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws GeometryError when den == 0.
Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);

std::strong_ordering compare(const Rational& a, const Rational& b);
std::string to_string(const Rational& q);

/// Element of Q(i).
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational real) : re(std::move(real)) {}  // NOLINT: implicit lift
  Gaussian(int real) : re(real) {}                  // NOLINT
  Gaussian(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  Gaussian conj() const { return Gaussian(re, -im); }
  Rational norm2() const { return Rational(re * re + im * im); }
  /// Throws GeometryError on zero.
  Gaussian inverse() const;
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return Gaussian(Rational(-a.re), Rational(-a.im)); }

  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  /// Lexicographic (re, im); only used to give containers a fixed order.
  friend std::strong_ordering operator<=>(const Gaussian& a, const Gaussian& b);
};

/// Canonical text: "3", "-1/2", "i", "-2i", "1/2-3i".
std::string to_string(const Gaussian& g);
std::ostream& operator<<(std::ostream& os, const Gaussian& g);

}  // namespace avoidance
