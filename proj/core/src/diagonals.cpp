#include "avoidance/diagonals.hpp"

#include <algorithm>

#include "avoidance/errors.hpp"

namespace avoidance {

Partition::Partition(std::vector<std::size_t> first, std::vector<std::size_t> second)
    : first_(std::move(first)), second_(std::move(second)) {
  std::sort(first_.begin(), first_.end());
  std::sort(second_.begin(), second_.end());
  if (first_.empty() || first_.size() != second_.size()) {
    throw GeometryError("partition halves must be nonempty and of equal size");
  }
  std::vector<std::size_t> all(first_);
  all.insert(all.end(), second_.begin(), second_.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != i) throw GeometryError("partition halves must split {1..2n}");
  }
  if (first_.front() != 0) std::swap(first_, second_);
}

std::string Partition::label() const {
  std::string out;
  for (auto i : first_) out += std::to_string(i + 1);
  out += "|";
  for (auto j : second_) out += std::to_string(j + 1);
  return out;
}

std::vector<Partition> enumerate_partitions(std::size_t n) {
  if (n == 0) throw GeometryError("partitions need n >= 1");
  std::vector<Partition> out;
  // I always contains 0; choose the remaining n-1 members from {1..2n-1}.
  for (const auto& rest : index_subsets(2 * n - 1, n - 1)) {
    std::vector<std::size_t> first{0};
    for (auto r : rest) first.push_back(r + 1);
    std::vector<std::size_t> second;
    for (std::size_t i = 0; i < 2 * n; ++i) {
      if (!std::binary_search(first.begin(), first.end(), i)) second.push_back(i);
    }
    out.emplace_back(std::move(first), std::move(second));
  }
  return out;
}

ProjPoint intersection_point(std::span<const ProjLine> hs) {
  if (hs.empty()) throw GeometryError("intersection of no hyperplanes");
  const std::size_t cols = hs.front().coefficients().size();
  if (hs.size() + 1 != cols) throw GeometryError("need exactly n hyperplanes of CP^n");
  std::vector<ComplexVector> rows;
  for (const auto& h : hs) rows.push_back(h.coefficients());
  const auto k = kernel_complex(ComplexMatrix(cols, std::move(rows)));
  if (k.size() != 1) throw GeometryError("hyperplanes not independent");
  return ProjPoint(k.front());
}

bool DiagonalLine::contains(const ProjPoint& x) const {
  const std::size_t cols = p.coords().size();
  return rank_complex(ComplexMatrix(cols, {p.coords(), q.coords(), x.coords()})) == 2;
}

std::vector<DiagonalLine> enumerate_diagonals(std::span<const ProjLine> hs) {
  if (hs.empty() || hs.size() % 2 != 0) throw GeometryError("need 2n hyperplanes");
  const std::size_t n = hs.size() / 2;
  const std::size_t cols = n + 1;
  for (const auto& h : hs) {
    if (h.coefficients().size() != cols) {
      throw GeometryError("2n hyperplanes must live in CP^n");
    }
  }
  for (const auto& subset : index_subsets(hs.size(), cols)) {
    std::vector<ComplexVector> rows;
    for (auto i : subset) rows.push_back(hs[i].coefficients());
    if (rank_complex(ComplexMatrix(cols, std::move(rows))) < cols) {
      std::string names;
      for (auto i : subset) names += (names.empty() ? "H" : ", H") + std::to_string(i + 1);
      throw GeometryError("hyperplanes not in general position: {" + names + "} are dependent");
    }
  }

  std::vector<DiagonalLine> out;
  for (auto& part : enumerate_partitions(n)) {
    auto pick = [&](const std::vector<std::size_t>& idx) {
      std::vector<ProjLine> sel;
      for (auto i : idx) sel.push_back(hs[i]);
      return intersection_point(sel);
    };
    ProjPoint p = pick(part.first());
    ProjPoint q = pick(part.second());
    if (p == q) throw GeometryError("diagonal endpoints coincide");
    std::optional<ProjLine> form;
    if (n == 2) form = line_through(p, q);
    out.push_back(DiagonalLine{std::move(part), std::move(p), std::move(q), std::move(form)});
  }
  return out;
}

}  // namespace avoidance
