#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "avoidance/rational.hpp"

namespace avoidance {

/// Real dimension of C^3 viewed as R^6 with coordinates (x1, y1, x2, y2, x3, y3).
inline constexpr std::size_t kRealDim = 6;

using RealVector = std::vector<Rational>;
using ComplexVector = std::vector<Gaussian>;

/// Rows of length 6 over Q.
class RealMatrix {
 public:
  RealMatrix() = default;
  /// Throws GeometryError if a row does not have exactly 6 entries.
  explicit RealMatrix(std::vector<RealVector> rows);

  const std::vector<RealVector>& rows() const { return rows_; }
  std::size_t row_count() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  void append(const RealMatrix& other);

  friend bool operator==(const RealMatrix&, const RealMatrix&) = default;

 private:
  std::vector<RealVector> rows_;
};

/// Rows over Q(i) sharing one length.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t cols, std::vector<ComplexVector> rows);
  /// Column count taken from the first row; throws on an empty list.
  explicit ComplexMatrix(std::vector<ComplexVector> rows);

  static ComplexMatrix identity(std::size_t n);

  const std::vector<ComplexVector>& rows() const { return rows_; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_; }
  const Gaussian& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }

  ComplexVector apply(const ComplexVector& v) const;
  ComplexMatrix operator*(const ComplexMatrix& other) const;
  /// Transposed product v^T M, i.e. the pullback of a linear form.
  ComplexVector pull_back(const ComplexVector& form) const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<ComplexVector> rows_;
};

std::size_t rank_real(const RealMatrix& m);
std::size_t rank_complex(const ComplexMatrix& m);

/// Basis of {v : m v = 0}; every vector has its first nonzero entry equal to 1.
std::vector<ComplexVector> kernel_complex(const ComplexMatrix& m);

/// Basis of the Euclidean orthogonal complement of the row span, same
/// canonical scaling as kernel_complex.
RealMatrix orthogonal_complement(const RealMatrix& m);

/// One exact solution of m x = rhs, or nullopt when the system is inconsistent.
std::optional<ComplexVector> solve_complex(const ComplexMatrix& m, const ComplexVector& rhs);

/// Throws GeometryError when m is singular or not square.
ComplexMatrix inverse(const ComplexMatrix& m);

Gaussian determinant(const ComplexMatrix& m);

/// Scales v so that its first nonzero entry is 1. Returns false for the zero vector.
bool normalize_leading(ComplexVector& v);
bool normalize_leading(RealVector& v);

bool is_zero(const ComplexVector& v);
bool is_zero(const RealVector& v);

Gaussian dot(const ComplexVector& a, const ComplexVector& b);

}  // namespace avoidance
