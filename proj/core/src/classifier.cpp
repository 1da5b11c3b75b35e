#include "avoidance/classifier.hpp"

#include "avoidance/errors.hpp"
#include "avoidance/projective.hpp"
#include "avoidance/witness.hpp"

namespace avoidance {

std::string to_string(VerdictTag t) {
  return t == VerdictTag::AllCurvesConstant ? "AllCurvesConstant" : "WitnessExists";
}

Verdict classify(std::span<const ComplexHyperplane> hs, const RealSubspace& h,
                 const SamplingPlan& plan) {
  if (hs.size() != 4) throw GeometryError("classify needs exactly 4 complex hyperplanes");
  for (const auto& x : hs) {
    if (x.dimension() != 3) throw GeometryError("classify needs hyperplanes of C^3");
  }
  if (h.dimension() != 5) throw GeometryError("classify needs a real subspace of dimension 5");
  for (std::size_t a = 0; a < hs.size(); ++a) {
    for (std::size_t b = a + 1; b < hs.size(); ++b) {
      if (hs[a].same_set(hs[b])) {
        throw GeometryError("hyperplanes H" + std::to_string(a + 1) + " and H" +
                            std::to_string(b + 1) + " coincide");
      }
    }
  }
  std::vector<ProjLine> lines;
  for (const auto& x : hs) lines.emplace_back(x.coefficients());
  if (!hyperplanes_in_general_position(lines)) {
    throw GeometryError("hyperplanes are not in general position");
  }

  Verdict v{VerdictTag::AllCurvesConstant, extract_complex_hyperplane(h), {}, {}, {}, {}};
  const RealSubspace tilde = realify(v.complex_part);
  std::optional<HyperplanePair> degenerate;
  for (const auto& pair : index_subsets(4, 2)) {
    const std::size_t rank = triple_span_rank(tilde, realify(hs[pair[0]]), realify(hs[pair[1]]));
    v.evidence.push_back({pair[0], pair[1], rank});
    if (rank < kRealDim && !degenerate) degenerate = HyperplanePair{pair[0], pair[1]};
  }
  if (!degenerate) return v;

  v.tag = VerdictTag::WitnessExists;
  try {
    v.witness = witness_thm3_2(hs, h, *degenerate);
  } catch (const ConstructionError& e) {
    v.obstruction = e.what();
    return v;
  }
  Scene scene;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    scene.hyperplanes.push_back({"H" + std::to_string(i + 1), hs[i]});
  }
  scene.real_subspaces.push_back({"H", h});
  v.report = verify(*v.witness, scene, plan, "witness");
  if (!v.report->all_avoided()) {
    v.obstruction = "constructed curve failed verification";
  } else if (v.report->projection_constant) {
    v.obstruction = "constructed curve has constant projection";
  }
  return v;
}

}  // namespace avoidance
