#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "avoidance/arrangement.hpp"
#include "avoidance/exp_sum.hpp"
#include "avoidance/verifier.hpp"

namespace avoidance {

enum class VerdictTag { AllCurvesConstant, WitnessExists };

std::string to_string(VerdictTag t);

/// Rank of Span(H~^perp, H_j^perp, H_k^perp) for 0-based j < k; 6 or 4.
struct TripleRank {
  std::size_t j;
  std::size_t k;
  std::size_t rank;

  bool in_general_position() const { return rank == kRealDim; }
};

struct Verdict {
  VerdictTag tag = VerdictTag::AllCurvesConstant;
  ComplexHyperplane complex_part;
  std::vector<TripleRank> evidence;
  std::optional<ExpAffineCurve> witness;
  std::optional<VerificationReport> report;
  /// Set when the tag is WitnessExists but no curve could be built or verified.
  std::optional<std::string> obstruction;
};

/// Four pairwise distinct hyperplanes of C^3 in general position and a real
/// hyperplane H of R^6. Throws GeometryError otherwise.
Verdict classify(std::span<const ComplexHyperplane> hs, const RealSubspace& h,
                 const SamplingPlan& plan = {});

}  // namespace avoidance
