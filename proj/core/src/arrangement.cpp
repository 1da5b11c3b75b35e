#include "avoidance/arrangement.hpp"

#include "avoidance/errors.hpp"

namespace avoidance {
namespace {

RealMatrix stack(std::initializer_list<const RealSubspace*> parts) {
  RealMatrix m;
  for (const auto* p : parts) m.append(p->complement_basis());
  return m;
}

}  // namespace

RealLinearForm::RealLinearForm(RealVector coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != kRealDim) throw GeometryError("real form needs 6 coefficients");
  if (is_zero(coefficients_)) throw GeometryError("zero real form");
}

Rational RealLinearForm::evaluate(const RealVector& x) const {
  if (x.size() != kRealDim) throw GeometryError("real point needs 6 coordinates");
  Rational s = 0;
  for (std::size_t i = 0; i < kRealDim; ++i) s += coefficients_[i] * x[i];
  return s;
}

ComplexVector RealLinearForm::as_complex() const {
  ComplexVector beta;
  for (std::size_t j = 0; j < 3; ++j) {
    beta.emplace_back(coefficients_[2 * j], Rational(-coefficients_[2 * j + 1]));
  }
  return beta;
}

RealLinearForm RealLinearForm::real_part_of(const ComplexVector& beta) {
  if (beta.size() != 3) throw GeometryError("real forms live on C^3");
  RealVector c;
  for (const auto& b : beta) {
    c.push_back(b.re);
    c.push_back(Rational(-b.im));
  }
  return RealLinearForm(std::move(c));
}

std::string to_string(const RealLinearForm& f) {
  static const char* const kNames[kRealDim] = {"x1", "y1", "x2", "y2", "x3", "y3"};
  std::string out;
  for (std::size_t i = 0; i < kRealDim; ++i) {
    const Rational& c = f.coefficients()[i];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    std::string body = mag == 1 ? kNames[i] : to_string(mag) + "*" + kNames[i];
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

RealSubspace::RealSubspace(std::vector<RealLinearForm> forms) : forms_(std::move(forms)) {
  if (forms_.empty()) throw GeometryError("real subspace needs at least one defining form");
  if (rank_real(complement_basis()) != forms_.size()) {
    throw GeometryError("defining forms of a real subspace must be independent");
  }
}

RealMatrix RealSubspace::complement_basis() const {
  std::vector<RealVector> rows;
  rows.reserve(forms_.size());
  for (const auto& f : forms_) rows.push_back(f.coefficients());
  return RealMatrix(std::move(rows));
}

RealMatrix RealSubspace::basis() const { return orthogonal_complement(complement_basis()); }

bool RealSubspace::contains(const RealVector& x) const {
  for (const auto& f : forms_) {
    if (sgn(f.evaluate(x)) != 0) return false;
  }
  return true;
}

bool RealSubspace::contains_subspace(const RealSubspace& other) const {
  // other is inside *this iff this^perp is inside other^perp.
  RealMatrix m = other.complement_basis();
  m.append(complement_basis());
  return rank_real(m) == other.codimension();
}

bool RealSubspace::same_subspace(const RealSubspace& other) const {
  return codimension() == other.codimension() && contains_subspace(other);
}

RealSubspace realify(const ComplexHyperplane& h) {
  if (h.dimension() != 3) throw GeometryError("realify expects a hyperplane of C^3");
  // a z = (p + iq)(x + iy): Re = p x - q y, Im = q x + p y.
  RealVector re;
  RealVector im;
  for (const auto& a : h.coefficients()) {
    re.push_back(a.re);
    re.push_back(Rational(-a.im));
    im.push_back(a.im);
    im.push_back(a.re);
  }
  return RealSubspace({RealLinearForm(std::move(re)), RealLinearForm(std::move(im))});
}

std::size_t triple_span_rank(const RealSubspace& a, const RealSubspace& b, const RealSubspace& c) {
  return rank_real(stack({&a, &b, &c}));
}

bool triple_in_general_position(const RealSubspace& a, const RealSubspace& b,
                                const RealSubspace& c) {
  for (const auto* s : {&a, &b, &c}) {
    if (s->dimension() != 4) {
      throw GeometryError("general position is defined for real subspaces of dimension 4");
    }
  }
  return triple_span_rank(a, b, c) == kRealDim;
}

bool family_in_general_position(std::span<const RealSubspace> hs) {
  if (hs.size() < 3) throw GeometryError("general position needs at least 3 subspaces");
  for (const auto& t : index_subsets(hs.size(), 3)) {
    if (!triple_in_general_position(hs[t[0]], hs[t[1]], hs[t[2]])) return false;
  }
  return true;
}

ComplexHyperplane extract_complex_hyperplane(const RealSubspace& h) {
  if (h.dimension() != 5) {
    throw GeometryError("complex hyperplane extraction needs a real subspace of dimension 5");
  }
  ComplexHyperplane tilde(h.forms().front().as_complex());
  if (!h.contains_subspace(realify(tilde))) {
    throw GeometryError("internal: extracted hyperplane is not contained in H");
  }
  return tilde;
}

CollapsedRealForm collapse_real_form(const RealSubspace& h, const Gaussian& c2,
                                     const Gaussian& c3) {
  if (h.codimension() != 1) throw GeometryError("collapse needs a single defining form");
  const RealVector& k = h.forms().front().coefficients();
  const Gaussian c[3] = {Gaussian(1), c2, c3};
  // Re(c w) = Re c Re w - Im c Im w and Im(c w) = Re c Im w + Im c Re w, so
  // sum_j a_j Re(c_j w) + b_j Im(c_j w) collects into a Re w + b Im w with:
  CollapsedRealForm out{Rational(0), Rational(0)};
  for (std::size_t j = 0; j < 3; ++j) {
    const Rational& aj = k[2 * j];
    const Rational& bj = k[2 * j + 1];
    out.a += aj * c[j].re + bj * c[j].im;
    out.b += bj * c[j].re - aj * c[j].im;
  }
  return out;
}

}  // namespace avoidance
