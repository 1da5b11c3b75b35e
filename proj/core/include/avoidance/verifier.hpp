#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "avoidance/exp_sum.hpp"
#include "avoidance/scene.hpp"

namespace avoidance {

/// Where and how densely the sampler looks. Samples live in the closed disk
/// |z| <= disk_radius of the curve parameter.
struct SamplingPlan {
  double disk_radius = 10.0;
  /// Points per axis of the grid over the square circumscribing the disk.
  std::size_t grid_points = 101;
  std::size_t random_points = 10000;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  /// Threads used for the final margin scan; results do not depend on it.
  std::size_t workers = 1;
  /// Bisection along grid edges where a defining form changes sign, plus a
  /// Gauss-Newton polish of the closest samples.
  bool targeted = true;

  /// Throws GeometryError for non-positive sizes or tolerances.
  void validate() const;
};

/// A set given as the common zero set of real forms z -> Re(beta . z). A
/// complex hyperplane a contributes Re(a . z) and Im(a . z) = Re(-i a . z).
struct SetProbe {
  std::string name;
  std::string kind;  // "complex_hyperplane" or "real_subspace"
  std::vector<ComplexVector> real_forms;
};

SetProbe probe_for(const std::string& name, const ComplexHyperplane& h);
SetProbe probe_for(const std::string& name, const RealSubspace& h);

/// max_k |Re(beta_k . f(t))| / (|beta_k| |f(t)|): scale invariant, zero
/// exactly on the set. Returns 0 where f(t) = 0.
double relative_margin(const ExpAffineCurve& f, const SetProbe& probe, Complex t);

enum class Method { Exact, Sampled };
enum class SetVerdict { Avoided, Violated, ExactZeroSetHit };

std::string to_string(Method m);
std::string to_string(SetVerdict v);

struct SetResult {
  std::string set;
  std::string kind;
  Method method = Method::Exact;
  SetVerdict verdict = SetVerdict::Avoided;
  /// Only for sampled verdicts.
  std::optional<double> min_margin;
  std::optional<Complex> violation_sample;
  std::size_t samples = 0;
  std::size_t targeted_samples = 0;
  /// Targeted points (not serialized); kept for inspection by callers.
  std::vector<Complex> targeted_points;
};

struct ProjectionValue {
  Complex at;
  std::vector<Complex> point;  // first coordinate of modulus > 1e-12 scaled to 1
};

struct VerificationReport {
  std::string curve;
  std::vector<SetResult> sets;
  bool projection_constant = false;
  std::vector<ProjectionValue> projection_values;

  bool all_avoided() const;
  const SetResult& result(const std::string& set) const;
};

/// Grid points inside the disk followed by the seeded random points.
std::vector<Complex> base_samples(const SamplingPlan& plan);

VerificationReport verify(const ExpAffineCurve& f, const Scene& scene, const SamplingPlan& plan,
                          const std::string& curve_name = "");

std::string to_json(const VerificationReport& r, int indent = 2);
std::string to_human(const VerificationReport& r);

/// pi(f)(t) with the first coordinate of modulus > 1e-12 (relative) scaled to 1.
std::vector<Complex> projective_value(const ExpAffineCurve& f, Complex t);

}  // namespace avoidance
