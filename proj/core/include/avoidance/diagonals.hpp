#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "avoidance/projective.hpp"

namespace avoidance {

/// Balanced split I | J of {0, ..., 2n-1} (printed 1-based). Canonical: 0 is in I.
class Partition {
 public:
  /// Throws GeometryError unless `first` and `second` split {0..2n-1} evenly.
  Partition(std::vector<std::size_t> first, std::vector<std::size_t> second);

  const std::vector<std::size_t>& first() const { return first_; }
  const std::vector<std::size_t>& second() const { return second_; }
  std::size_t half() const { return first_.size(); }
  /// 1-based label such as "12|34".
  std::string label() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> first_;
  std::vector<std::size_t> second_;
};

/// C(2n, n) / 2 canonical partitions, ordered lexicographically by I.
std::vector<Partition> enumerate_partitions(std::size_t n);

/// Unique common point of n hyperplanes of CP^n. Throws when they are dependent.
ProjPoint intersection_point(std::span<const ProjLine> hs);

/// The line through p = /\_{i in I} H_i and q = /\_{j in J} H_j.
struct DiagonalLine {
  Partition partition;
  ProjPoint p;
  ProjPoint q;
  /// Defining form; only present in CP^2 where the line is a hyperplane.
  std::optional<ProjLine> form;

  /// x lies on the span of p and q.
  bool contains(const ProjPoint& x) const;
};

/// One diagonal per canonical partition of 2n hyperplanes of CP^n in general
/// position. Throws GeometryError naming a dependent (n+1)-subset otherwise.
std::vector<DiagonalLine> enumerate_diagonals(std::span<const ProjLine> hs);

}  // namespace avoidance
