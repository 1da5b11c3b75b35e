#include "avoidance/exact_linalg.hpp"

#include <utility>

#include "avoidance/errors.hpp"

namespace avoidance {
namespace {

bool zero(const Rational& q) { return sgn(q) == 0; }
bool zero(const Gaussian& g) { return g.is_zero(); }
Rational invert(const Rational& q) { return Rational(1 / q); }
Gaussian invert(const Gaussian& g) { return g.inverse(); }

// Reduced row echelon form; pivots[r] is the pivot column of row r.
template <typename Scalar>
struct Echelon {
  std::vector<std::vector<Scalar>> rows;
  std::vector<std::size_t> pivots;
};

template <typename Scalar>
Echelon<Scalar> reduce(std::vector<std::vector<Scalar>> a, std::size_t cols) {
  Echelon<Scalar> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t pick = row;
    while (pick < a.size() && zero(a[pick][col])) ++pick;
    if (pick == a.size()) continue;
    std::swap(a[row], a[pick]);
    const Scalar scale = invert(a[row][col]);
    for (auto& x : a[row]) x *= scale;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || zero(a[r][col])) continue;
      const Scalar factor = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[row][c];
    }
    out.pivots.push_back(col);
    ++row;
  }
  a.resize(row);
  out.rows = std::move(a);
  return out;
}

template <typename Scalar>
std::vector<std::vector<Scalar>> kernel_of(const std::vector<std::vector<Scalar>>& rows,
                                           std::size_t cols) {
  const auto ech = reduce(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols, Scalar(0));
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.rows[r][free];
    normalize_leading(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename Scalar>
bool normalize_leading_impl(std::vector<Scalar>& v) {
  for (const auto& x : v) {
    if (zero(x)) continue;
    const Scalar s = invert(x);
    for (auto& y : v) y *= s;
    return true;
  }
  return false;
}

}  // namespace

RealMatrix::RealMatrix(std::vector<RealVector> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != kRealDim) throw GeometryError("real matrix rows must have 6 entries");
  }
}

void RealMatrix::append(const RealMatrix& other) {
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

ComplexMatrix::ComplexMatrix(std::size_t cols, std::vector<ComplexVector> rows)
    : cols_(cols), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw GeometryError("complex matrix rows must share one length");
  }
}

ComplexMatrix::ComplexMatrix(std::vector<ComplexVector> rows) {
  if (rows.empty()) throw GeometryError("column count of an empty matrix is undefined");
  cols_ = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw GeometryError("complex matrix rows must share one length");
  }
  rows_ = std::move(rows);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  std::vector<ComplexVector> rows(n, ComplexVector(n, Gaussian(0)));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = Gaussian(1);
  return ComplexMatrix(n, std::move(rows));
}

ComplexVector ComplexMatrix::apply(const ComplexVector& v) const {
  if (v.size() != cols_) throw GeometryError("dimension mismatch in matrix-vector product");
  ComplexVector out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(dot(r, v));
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
  if (cols_ != other.row_count()) throw GeometryError("dimension mismatch in matrix product");
  std::vector<ComplexVector> rows;
  rows.reserve(rows_.size());
  for (const auto& r : rows_) rows.push_back(other.pull_back(r));
  return ComplexMatrix(other.col_count(), std::move(rows));
}

ComplexVector ComplexMatrix::pull_back(const ComplexVector& form) const {
  if (form.size() != rows_.size()) throw GeometryError("dimension mismatch in pullback");
  ComplexVector out(cols_, Gaussian(0));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (form[r].is_zero()) continue;
    for (std::size_t c = 0; c < cols_; ++c) out[c] += form[r] * rows_[r][c];
  }
  return out;
}

std::size_t rank_real(const RealMatrix& m) { return reduce(m.rows(), kRealDim).pivots.size(); }

std::size_t rank_complex(const ComplexMatrix& m) {
  return reduce(m.rows(), m.col_count()).pivots.size();
}

std::vector<ComplexVector> kernel_complex(const ComplexMatrix& m) {
  return kernel_of(m.rows(), m.col_count());
}

RealMatrix orthogonal_complement(const RealMatrix& m) {
  return RealMatrix(kernel_of(m.rows(), kRealDim));
}

std::optional<ComplexVector> solve_complex(const ComplexMatrix& m, const ComplexVector& rhs) {
  if (rhs.size() != m.row_count()) throw GeometryError("right-hand side length mismatch");
  const std::size_t cols = m.col_count();
  std::vector<ComplexVector> aug;
  aug.reserve(m.row_count());
  for (std::size_t r = 0; r < m.row_count(); ++r) {
    ComplexVector row = m.rows()[r];
    row.push_back(rhs[r]);
    aug.push_back(std::move(row));
  }
  const auto ech = reduce(std::move(aug), cols + 1);
  if (!ech.pivots.empty() && ech.pivots.back() == cols) return std::nullopt;
  ComplexVector x(cols, Gaussian(0));
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.rows[r][cols];
  return x;
}

ComplexMatrix inverse(const ComplexMatrix& m) {
  const std::size_t n = m.col_count();
  if (m.row_count() != n) throw GeometryError("inverse of a non-square matrix");
  std::vector<ComplexVector> aug;
  for (std::size_t r = 0; r < n; ++r) {
    ComplexVector row = m.rows()[r];
    for (std::size_t c = 0; c < n; ++c) row.push_back(Gaussian(r == c ? 1 : 0));
    aug.push_back(std::move(row));
  }
  const auto ech = reduce(std::move(aug), 2 * n);
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) {
    throw GeometryError("matrix is singular");
  }
  std::vector<ComplexVector> rows;
  for (const auto& row : ech.rows) rows.emplace_back(row.begin() + static_cast<long>(n), row.end());
  return ComplexMatrix(n, std::move(rows));
}

Gaussian determinant(const ComplexMatrix& m) {
  const std::size_t n = m.col_count();
  if (m.row_count() != n) throw GeometryError("determinant of a non-square matrix");
  auto a = m.rows();
  Gaussian det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pick = col;
    while (pick < n && a[pick][col].is_zero()) ++pick;
    if (pick == n) return Gaussian(0);
    if (pick != col) {
      std::swap(a[pick], a[col]);
      det = -det;
    }
    det *= a[col][col];
    const Gaussian inv = a[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      const Gaussian f = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

bool normalize_leading(ComplexVector& v) { return normalize_leading_impl(v); }
bool normalize_leading(RealVector& v) { return normalize_leading_impl(v); }

bool is_zero(const ComplexVector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool is_zero(const RealVector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Gaussian dot(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw GeometryError("dimension mismatch in dot product");
  Gaussian s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace avoidance
