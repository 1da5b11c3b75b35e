#include "avoidance/projective.hpp"

#include <sstream>

#include "avoidance/errors.hpp"

namespace avoidance {
namespace {

ComplexVector canonical(ComplexVector v, const char* what) {
  if (v.size() < 2) throw GeometryError(std::string(what) + " needs at least two coordinates");
  if (!normalize_leading(v)) throw GeometryError(std::string(what) + " with all coordinates zero");
  return v;
}

}  // namespace

ProjPoint::ProjPoint(ComplexVector homogeneous)
    : coords_(canonical(std::move(homogeneous), "projective point")) {}

ProjLine::ProjLine(ComplexVector coefficients)
    : coefficients_(canonical(std::move(coefficients), "projective line")) {}

bool ProjLine::contains(const ProjPoint& p) const {
  return dot(coefficients_, p.coords()).is_zero();
}

ComplexHyperplane::ComplexHyperplane(ComplexVector coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.size() < 2) throw GeometryError("hyperplane needs at least two coordinates");
  if (is_zero(coefficients_)) throw GeometryError("zero linear form does not define a hyperplane");
}

bool ComplexHyperplane::same_set(const ComplexHyperplane& other) const {
  return dimension() == other.dimension() &&
         project_hyperplane(*this) == project_hyperplane(other);
}

std::string format_complex_form(const ComplexVector& coefficients) {
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const Gaussian& a = coefficients[i];
    if (a.is_zero()) continue;
    const std::string var = "z" + std::to_string(i + 1);
    bool negative = false;
    std::string body;
    if (a.is_real() || sgn(a.re) == 0) {
      // Pure real or pure imaginary: pull the sign out front.
      const Gaussian mag = (a.is_real() ? sgn(a.re) : sgn(a.im)) < 0 ? -a : a;
      negative = !(mag == a);
      body = mag == Gaussian(1) ? var : to_string(mag) + "*" + var;
    } else {
      body = "(" + to_string(a) + ")*" + var;
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const ProjPoint& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    if (i) out += ":";
    out += to_string(p.coords()[i]);
  }
  return out + "]";
}

ProjPoint project_point(const ComplexVector& v) {
  if (is_zero(v)) throw GeometryError("projection undefined at origin");
  return ProjPoint(v);
}

ProjLine project_hyperplane(const ComplexHyperplane& h) { return ProjLine(h.coefficients()); }

ProjPoint intersect_lines(const ProjLine& a, const ProjLine& b) {
  if (a.ambient_dimension() != 2 || b.ambient_dimension() != 2) {
    throw GeometryError("intersect_lines expects lines of CP^2");
  }
  if (a == b) throw GeometryError("identical lines");
  const auto k = kernel_complex(ComplexMatrix(3, {a.coefficients(), b.coefficients()}));
  return ProjPoint(k.front());
}

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
  if (p.ambient_dimension() != 2 || q.ambient_dimension() != 2) {
    throw GeometryError("line_through expects points of CP^2");
  }
  if (p == q) throw GeometryError("identical points");
  const auto k = kernel_complex(ComplexMatrix(3, {p.coords(), q.coords()}));
  return ProjLine(k.front());
}

std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

bool hyperplanes_in_general_position(std::span<const ProjLine> hs) {
  if (hs.empty()) throw GeometryError("empty hyperplane family");
  const std::size_t cols = hs.front().coefficients().size();
  for (const auto& h : hs) {
    if (h.coefficients().size() != cols) throw GeometryError("hyperplanes of mixed dimension");
  }
  if (hs.size() < cols) {
    throw GeometryError("general position needs at least n+1 hyperplanes in CP^n");
  }
  for (const auto& subset : index_subsets(hs.size(), cols)) {
    std::vector<ComplexVector> rows;
    for (auto i : subset) rows.push_back(hs[i].coefficients());
    if (rank_complex(ComplexMatrix(cols, std::move(rows))) < cols) return false;
  }
  return true;
}

bool lines_in_general_position(std::span<const ProjLine> ls) {
  if (ls.size() < 3) throw GeometryError("general position of lines needs at least 3 lines");
  for (const auto& l : ls) {
    if (l.ambient_dimension() != 2) throw GeometryError("expected lines of CP^2");
  }
  return hyperplanes_in_general_position(ls);
}

}  // namespace avoidance
