#include "avoidance/rational.hpp"

#include <sstream>

#include "avoidance/errors.hpp"

namespace avoidance {

Rational make_rational(long num, long den) {
  if (den == 0) throw GeometryError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw GeometryError("malformed rational '" + text + "'");
  if (sgn(q.get_den()) == 0) throw GeometryError("rational with zero denominator");
  q.canonicalize();
  return q;
}

std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Gaussian Gaussian::inverse() const {
  if (is_zero()) throw GeometryError("division by zero in Q(i)");
  const Rational n = norm2();
  return Gaussian(Rational(re / n), Rational(-im / n));
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const Gaussian& a, const Gaussian& b) {
  if (auto c = compare(a.re, b.re); c != 0) return c;
  return compare(a.im, b.im);
}

std::string to_string(const Gaussian& g) {
  if (g.is_real()) return to_string(g.re);
  std::string imag;
  if (g.im == 1) {
    imag = "i";
  } else if (g.im == -1) {
    imag = "-i";
  } else {
    imag = to_string(g.im) + "i";
  }
  if (sgn(g.re) == 0) return imag;
  if (sgn(g.im) > 0) return to_string(g.re) + "+" + imag;
  return to_string(g.re) + imag;
}

std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << to_string(g); }

}  // namespace avoidance
