#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "avoidance/exact_linalg.hpp"
#include "avoidance/projective.hpp"

namespace avoidance {

/// sum_j (a_j x_j + b_j y_j) on R^6, coefficients ordered (a1, b1, a2, b2, a3, b3).
class RealLinearForm {
 public:
  /// Throws GeometryError unless there are 6 coefficients, not all zero.
  explicit RealLinearForm(RealVector coefficients);

  const RealVector& coefficients() const { return coefficients_; }
  Rational evaluate(const RealVector& x) const;
  /// The complex covector beta with form(z) = Re(sum_j beta_j z_j), i.e. beta_j = a_j - i b_j.
  ComplexVector as_complex() const;
  /// Inverse of as_complex().
  static RealLinearForm real_part_of(const ComplexVector& beta);

  friend bool operator==(const RealLinearForm&, const RealLinearForm&) = default;

 private:
  RealVector coefficients_;
};

/// "x1 - x2" style rendering over (x1, y1, x2, y2, x3, y3).
std::string to_string(const RealLinearForm& f);

/// Common zero set of linearly independent real forms. The forms span the
/// orthogonal complement, so they double as its basis.
class RealSubspace {
 public:
  /// Throws GeometryError when the forms are empty or dependent.
  explicit RealSubspace(std::vector<RealLinearForm> forms);

  const std::vector<RealLinearForm>& forms() const { return forms_; }
  std::size_t dimension() const { return kRealDim - forms_.size(); }
  std::size_t codimension() const { return forms_.size(); }
  RealMatrix complement_basis() const;
  /// Basis of the subspace itself (kernel of the forms).
  RealMatrix basis() const;
  bool contains(const RealVector& x) const;
  /// other is a subset of *this.
  bool contains_subspace(const RealSubspace& other) const;
  bool same_subspace(const RealSubspace& other) const;

  friend bool operator==(const RealSubspace&, const RealSubspace&) = default;

 private:
  std::vector<RealLinearForm> forms_;
};

/// {Re(a.z) = 0, Im(a.z) = 0}, a real subspace of dimension 4. Needs a C^3 form.
RealSubspace realify(const ComplexHyperplane& h);

/// Rank of the stacked orthogonal-complement bases (6 means general position).
std::size_t triple_span_rank(const RealSubspace& a, const RealSubspace& b, const RealSubspace& c);
/// Throws GeometryError unless all three have real dimension 4.
bool triple_in_general_position(const RealSubspace& a, const RealSubspace& b,
                                const RealSubspace& c);
/// Every distinct triple in general position. Needs >= 3 codimension-2 members.
bool family_in_general_position(std::span<const RealSubspace> hs);

/// The unique complex hyperplane inside a real hyperplane: coefficients a_j - i b_j.
ComplexHyperplane extract_complex_hyperplane(const RealSubspace& h);

/// w -> a Re(w) + b Im(w), the restriction of a real hyperplane's form to the
/// complex line through (1, c2, c3).
struct CollapsedRealForm {
  enum class ZeroSet { Line, Plane };

  Rational a;
  Rational b;

  Rational evaluate(const Gaussian& w) const { return Rational(a * w.re + b * w.im); }
  /// {(x, y) : a x + b y = 0} is all of R^2 exactly when a = b = 0.
  ZeroSet zero_set() const {
    return sgn(a) == 0 && sgn(b) == 0 ? ZeroSet::Plane : ZeroSet::Line;
  }
};

CollapsedRealForm collapse_real_form(const RealSubspace& h, const Gaussian& c2,
                                     const Gaussian& c3);

}  // namespace avoidance
