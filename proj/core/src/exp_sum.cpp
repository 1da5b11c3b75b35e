#include "avoidance/exp_sum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "avoidance/errors.hpp"

namespace avoidance {
namespace {

void strip(std::vector<Gaussian>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Coefficient text for a product "coef*thing"; empty for 1.
std::string factor_text(const Gaussian& mag) {
  if (mag == Gaussian(1)) return "";
  if (mag.is_real() || sgn(mag.re) == 0) return to_string(mag) + "*";
  return "(" + to_string(mag) + ")*";
}

// Splits c into (negative?, magnitude) when c is purely real or imaginary.
bool pull_sign(const Gaussian& c, Gaussian& mag) {
  if (c.is_real() ? sgn(c.re) < 0 : (sgn(c.re) == 0 && sgn(c.im) < 0)) {
    mag = -c;
    return true;
  }
  mag = c;
  return false;
}

void append_signed(std::string& out, bool negative, const std::string& body) {
  if (out.empty()) {
    out = negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

}  // namespace

Poly::Poly(std::vector<Gaussian> ascending) : coeffs_(std::move(ascending)) { strip(coeffs_); }

Poly Poly::non_constant_part() const {
  if (coeffs_.size() <= 1) return Poly();
  auto c = coeffs_;
  c.front() = Gaussian(0);
  return Poly(std::move(c));
}

Poly Poly::conj() const {
  auto c = coeffs_;
  for (auto& x : c) x = x.conj();
  return Poly(std::move(c));
}

Complex Poly::evaluate(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->to_complex();
  return acc;
}

Complex Poly::evaluate_derivative(Complex z) const {
  Complex acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 1;) {
    acc = acc * z + static_cast<double>(k) * coeffs_[k].to_complex();
  }
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Gaussian> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Gaussian(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + Gaussian(-1) * b; }

Poly operator*(const Gaussian& s, const Poly& p) {
  auto c = p.coeffs_;
  for (auto& x : c) x *= s;
  return Poly(std::move(c));
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() <=> b.coeffs_.size();
  for (std::size_t k = a.coeffs_.size(); k-- > 0;) {
    if (auto c = a.coeffs_[k] <=> b.coeffs_[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Poly& p) {
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    Gaussian mag;
    const bool neg = pull_sign(c[k], mag);
    std::string body;
    if (k == 0) {
      body = (mag.is_real() || sgn(mag.re) == 0) ? to_string(mag) : "(" + to_string(mag) + ")";
    } else {
      body = factor_text(mag) + (k == 1 ? std::string("z") : "z^" + std::to_string(k));
    }
    append_signed(out, neg, body);
  }
  return out.empty() ? "0" : out;
}

ExpSum::ExpSum(std::vector<ExpPoly> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const ExpPoly& a, const ExpPoly& b) { return a.exponent < b.exponent; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().exponent == t.exponent) {
      terms_.back().coefficient += t.coefficient;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const ExpPoly& t) { return t.coefficient.is_zero(); });
}

bool ExpSum::is_constant() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const ExpPoly& t) { return t.exponent.is_constant(); });
}

std::map<Poly, ExpSum> ExpSum::classes() const {
  std::map<Poly, std::vector<ExpPoly>> grouped;
  for (const auto& t : terms_) {
    grouped[t.exponent.non_constant_part()].push_back(
        ExpPoly{t.coefficient, Poly::constant(t.exponent.constant_term())});
  }
  std::map<Poly, ExpSum> out;
  for (auto& [key, ts] : grouped) out.emplace(key, ExpSum(std::move(ts)));
  return out;
}

ExpSum ExpSum::conjugate_constant() const {
  if (!is_constant()) throw GeometryError("conjugate of a non-constant exponential sum");
  std::vector<ExpPoly> ts;
  for (const auto& t : terms_) ts.push_back(ExpPoly{t.coefficient.conj(), t.exponent.conj()});
  return ExpSum(std::move(ts));
}

Complex ExpSum::evaluate(Complex z) const {
  Complex acc = 0.0;
  for (const auto& t : terms_) acc += t.coefficient.to_complex() * std::exp(t.exponent.evaluate(z));
  return acc;
}

ExpSum& ExpSum::operator+=(const ExpSum& o) {
  auto ts = terms_;
  ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
  *this = ExpSum(std::move(ts));
  return *this;
}

ExpSum operator-(const ExpSum& a, const ExpSum& b) { return a + Gaussian(-1) * b; }

ExpSum operator*(const Gaussian& s, const ExpSum& e) {
  auto ts = e.terms_;
  for (auto& t : ts) t.coefficient *= s;
  return ExpSum(std::move(ts));
}

ExpSum operator*(const ExpSum& a, const ExpSum& b) {
  std::vector<ExpPoly> ts;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      ts.push_back(ExpPoly{x.coefficient * y.coefficient, x.exponent + y.exponent});
    }
  }
  return ExpSum(std::move(ts));
}

std::string to_string(const ExpSum& s) {
  std::string out;
  // Highest exponent first reads more naturally ("exp(2*z) + exp(z) + 1").
  for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
    Gaussian mag;
    const bool neg = pull_sign(it->coefficient, mag);
    std::string body;
    if (it->exponent.is_zero()) {
      body = (mag.is_real() || sgn(mag.re) == 0) ? to_string(mag) : "(" + to_string(mag) + ")";
    } else {
      body = factor_text(mag) + "exp(" + to_string(it->exponent) + ")";
    }
    append_signed(out, neg, body);
  }
  return out.empty() ? "0" : out;
}

bool is_identically_zero(const ExpSum& s) { return s.is_zero(); }

NowhereZero is_nowhere_zero(const ExpSum& s) {
  if (s.is_zero()) return NowhereZero::No;
  return s.classes().size() == 1 ? NowhereZero::Yes : NowhereZero::Unknown;
}

bool proportional(const ExpSum& a, const ExpSum& b) {
  if (a.is_zero() || b.is_zero()) return false;
  const auto ca = a.classes();
  const auto cb = b.classes();
  if (ca.size() != cb.size()) return false;
  for (auto ia = ca.begin(), ib = cb.begin(); ia != ca.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first)) return false;
  }
  // b = lambda a with lambda = K_b(q0) / K_a(q0); cross-multiply to stay exact.
  const ExpSum& ka0 = ca.begin()->second;
  const ExpSum& kb0 = cb.begin()->second;
  for (auto ia = ca.begin(), ib = cb.begin(); ia != ca.end(); ++ia, ++ib) {
    if (!(ka0 * ib->second - kb0 * ia->second).is_zero()) return false;
  }
  return true;
}

RealPartKind real_part_kind(const ExpSum& s) {
  if (!s.is_constant()) {
    // A holomorphic function with constant real part is constant.
    return RealPartKind::NonConstant;
  }
  return (s + s.conjugate_constant()).is_zero() ? RealPartKind::IdenticallyZero
                                                 : RealPartKind::NonzeroConstant;
}

ExpAffineCurve::ExpAffineCurve(std::vector<ExpSum> components)
    : components_(std::move(components)) {
  if (components_.empty() ||
      std::all_of(components_.begin(), components_.end(),
                  [](const ExpSum& s) { return s.is_zero(); })) {
    throw GeometryError("curve with every component identically zero");
  }
}

std::vector<Complex> ExpAffineCurve::evaluate(Complex z) const {
  std::vector<Complex> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.evaluate(z));
  return out;
}

ExpAffineCurve::Scaled ExpAffineCurve::evaluate_scaled(Complex z) const {
  double shift = -std::numeric_limits<double>::infinity();
  for (const auto& c : components_) {
    for (const auto& t : c.terms()) shift = std::max(shift, t.exponent.evaluate(z).real());
  }
  Scaled out{std::vector<Complex>(components_.size(), 0.0),
             std::vector<Complex>(components_.size(), 0.0)};
  if (!std::isfinite(shift)) return out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    for (const auto& t : components_[i].terms()) {
      const Complex e = t.coefficient.to_complex() * std::exp(t.exponent.evaluate(z) - shift);
      out.value[i] += e;
      out.derivative[i] += e * t.exponent.evaluate_derivative(z);
    }
  }
  return out;
}

std::string to_string(const ExpAffineCurve& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.components().size(); ++i) {
    if (i) out += ", ";
    out += to_string(f.components()[i]);
  }
  return out + ")";
}

ExpSum apply_form(std::span<const Gaussian> coefficients, const ExpAffineCurve& f) {
  if (coefficients.size() != f.dimension()) {
    throw GeometryError("linear form and curve have different dimensions");
  }
  std::vector<ExpPoly> ts;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i].is_zero()) continue;
    for (const auto& t : f.components()[i].terms()) {
      ts.push_back(ExpPoly{coefficients[i] * t.coefficient, t.exponent});
    }
  }
  return ExpSum(std::move(ts));
}

ExpSum apply_form(const ComplexHyperplane& h, const ExpAffineCurve& f) {
  return apply_form(std::span<const Gaussian>(h.coefficients()), f);
}

ExpSum apply_form(const ProjLine& l, const ExpAffineCurve& f) {
  return apply_form(std::span<const Gaussian>(l.coefficients()), f);
}

bool is_projectively_constant(const ExpAffineCurve& f) {
  const ExpSum* reference = nullptr;
  for (const auto& c : f.components()) {
    if (c.is_zero()) continue;
    if (reference == nullptr) {
      reference = &c;
    } else if (!proportional(*reference, c)) {
      return false;
    }
  }
  return true;
}

ExpAffineCurve transform(const ComplexMatrix& m, const ExpAffineCurve& f) {
  if (m.col_count() != f.dimension()) throw GeometryError("matrix and curve dimensions differ");
  std::vector<ExpSum> comps;
  for (const auto& row : m.rows()) comps.push_back(apply_form(std::span<const Gaussian>(row), f));
  return ExpAffineCurve(std::move(comps));
}

ExpAffineCurve exp_times(const Poly& h, const ComplexVector& v) {
  std::vector<ExpSum> comps;
  for (const auto& c : v) comps.push_back(ExpSum::term(c, h));
  return ExpAffineCurve(std::move(comps));
}

}  // namespace avoidance
