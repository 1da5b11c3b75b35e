#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "avoidance/exact_linalg.hpp"

namespace avoidance {

/// Point of CP^n in homogeneous coordinates, stored with its first nonzero
/// coordinate equal to 1 so that equality of objects is equality of points.
class ProjPoint {
 public:
  /// Throws GeometryError for the zero vector.
  explicit ProjPoint(ComplexVector homogeneous);

  const ComplexVector& coords() const { return coords_; }
  std::size_t ambient_dimension() const { return coords_.size() - 1; }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  ComplexVector coords_;
};

/// Hyperplane of CP^n given by a linear form up to scale; a line when n = 2.
class ProjLine {
 public:
  explicit ProjLine(ComplexVector coefficients);

  const ComplexVector& coefficients() const { return coefficients_; }
  std::size_t ambient_dimension() const { return coefficients_.size() - 1; }
  bool contains(const ProjPoint& p) const;

  friend bool operator==(const ProjLine&, const ProjLine&) = default;

 private:
  ComplexVector coefficients_;
};

/// {z : a_1 z_1 + ... + a_m z_m = 0} in C^m (m = 3 unless stated). The
/// coefficients are kept as given; use same_set() for set equality.
class ComplexHyperplane {
 public:
  explicit ComplexHyperplane(ComplexVector coefficients);

  const ComplexVector& coefficients() const { return coefficients_; }
  std::size_t dimension() const { return coefficients_.size(); }
  Gaussian evaluate(const ComplexVector& z) const { return dot(coefficients_, z); }
  bool contains(const ComplexVector& z) const { return evaluate(z).is_zero(); }
  bool same_set(const ComplexHyperplane& other) const;

  friend bool operator==(const ComplexHyperplane&, const ComplexHyperplane&) = default;

 private:
  ComplexVector coefficients_;
};

/// "a*z1 + b*z2 + ..." with zero terms omitted.
std::string format_complex_form(const ComplexVector& coefficients);
std::string to_string(const ProjPoint& p);

/// Throws GeometryError ("projection undefined at origin") for v = 0.
ProjPoint project_point(const ComplexVector& v);
ProjLine project_hyperplane(const ComplexHyperplane& h);

/// Common point of two distinct lines of CP^2. Throws for identical lines.
ProjPoint intersect_lines(const ProjLine& a, const ProjLine& b);
/// The line of CP^2 through two distinct points.
ProjLine line_through(const ProjPoint& p, const ProjPoint& q);

/// Any n+1 of the forms are linearly independent (hyperplanes of CP^n).
/// Requires at least n+1 entries of one ambient dimension.
bool hyperplanes_in_general_position(std::span<const ProjLine> hs);
/// CP^2 case: every three coefficient vectors have rank 3. Needs >= 3 lines.
bool lines_in_general_position(std::span<const ProjLine> ls);

/// Index subsets of size k of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k);

}  // namespace avoidance
