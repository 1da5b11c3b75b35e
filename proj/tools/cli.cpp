#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "avoidance/classifier.hpp"
#include "avoidance/diagonals.hpp"
#include "avoidance/errors.hpp"
#include "avoidance/scene.hpp"
#include "avoidance/verifier.hpp"
#include "avoidance/witness.hpp"
#include "json.hpp"

namespace avoidance::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string scene_path;
  bool human = false;
  std::string curve;
  std::string at;
  std::string theorem;
  std::string pair;
  std::string exponent;
  std::optional<std::uint64_t> seed;
  SamplingPlan plan;
};

struct Output {
  Json json;
  std::ostringstream text;
  int code = kSuccess;
};

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json report_json(const VerificationReport& r) { return Json::parse(to_json(r)); }

std::uint64_t seed_from_env() {
  const char* s = std::getenv("AVOIDANCE_SEED");
  if (s == nullptr || *s == '\0') return SamplingPlan{}.seed;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used, 10);
    if (used != std::string(s).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw GeometryError(std::string("AVOIDANCE_SEED is not an unsigned integer: '") + s + "'");
  }
}

SamplingPlan resolve_plan(const Options& o) {
  SamplingPlan p = o.plan;
  p.seed = o.seed ? *o.seed : seed_from_env();
  p.validate();
  return p;
}

Poly resolve_exponent(const Options& o) {
  if (o.exponent.empty()) return Poly::identity();
  const Poly p = parse_poly(o.exponent);
  if (p.is_constant()) throw GeometryError("exponent must be a non-constant polynomial");
  return p;
}

std::string names_of(const Scene& s) {
  std::string out;
  for (const auto& h : s.hyperplanes) out += (out.empty() ? "" : ", ") + h.name;
  return out;
}

void require_ambient3(const Scene& s, const char* command) {
  if (s.ambient != 3) throw GeometryError(std::string(command) + " needs a scene in C^3");
}

const Named<RealSubspace>& single_real(const Scene& s, std::size_t dimension, const char* command) {
  if (s.real_subspaces.size() != 1) {
    throw GeometryError(std::string(command) + " needs exactly one real subspace, found " +
                        std::to_string(s.real_subspaces.size()));
  }
  const auto& h = s.real_subspaces.front();
  if (h.value.dimension() != dimension) {
    throw GeometryError("real subspace " + h.name + " has dimension " +
                        std::to_string(h.value.dimension()) + ", expected " +
                        std::to_string(dimension));
  }
  return h;
}

void require_count(const Scene& s, std::size_t n, const char* command) {
  if (s.hyperplanes.size() != n) {
    throw GeometryError(std::string(command) + " needs exactly " + std::to_string(n) +
                        " hyperplanes, found " + std::to_string(s.hyperplanes.size()));
  }
}

void append_report_text(std::ostringstream& text, const VerificationReport& r) { text << to_human(r); }

// ---------------------------------------------------------------------------

void cmd_gp_check(const Scene& scene, Output& o) {
  require_ambient3(scene, "gp-check");
  std::vector<Named<RealSubspace>> family;
  std::vector<std::string> skipped;
  for (const auto& h : scene.hyperplanes) family.push_back({h.name, realify(h.value)});
  for (const auto& r : scene.real_subspaces) {
    if (r.value.dimension() == 4) {
      family.push_back(r);
    } else {
      skipped.push_back(r.name);
    }
  }
  if (family.size() < 3) throw GeometryError("gp-check needs at least 3 codimension-2 subspaces");

  bool all = true;
  Json triples = Json::array();
  o.text << "family: ";
  for (std::size_t i = 0; i < family.size(); ++i) o.text << (i ? ", " : "") << family[i].name;
  o.text << "\n";
  for (const auto& t : index_subsets(family.size(), 3)) {
    const std::size_t rank =
        triple_span_rank(family[t[0]].value, family[t[1]].value, family[t[2]].value);
    const bool gp = rank == kRealDim;
    all = all && gp;
    triples.push_back(Json{{"sets", {family[t[0]].name, family[t[1]].name, family[t[2]].name}},
                           {"rank", rank},
                           {"general_position", gp}});
    o.text << "  (" << family[t[0]].name << ", " << family[t[1]].name << ", "
           << family[t[2]].name << "): rank " << rank << (gp ? "" : "  <- degenerate") << "\n";
  }
  o.text << (all ? "in general position\n" : "not in general position\n");
  Json members = Json::array();
  for (const auto& m : family) members.push_back(m.name);
  o.json = Json{{"command", "gp-check"},
                {"members", members},
                {"skipped", skipped},
                {"triples", triples},
                {"general_position", all}};
}

void cmd_diagonals(const Scene& scene, Output& o) {
  std::vector<ProjLine> lines;
  for (const auto& h : scene.hyperplanes) lines.push_back(project_hyperplane(h.value));
  const std::size_t n = scene.ambient - 1;
  if (lines.size() != 2 * n) {
    throw GeometryError("diagonals needs 2n = " + std::to_string(2 * n) +
                        " hyperplanes in CP^" + std::to_string(n) + ", found " +
                        std::to_string(lines.size()));
  }
  const auto ds = enumerate_diagonals(lines);
  Json arr = Json::array();
  o.text << ds.size() << " diagonals of " << names_of(scene) << "\n";
  for (const auto& d : ds) {
    Json e{{"partition", d.partition.label()},
           {"p", to_string(d.p)},
           {"q", to_string(d.q)},
           {"line", d.form ? Json(format_complex_form(d.form->coefficients()) + " = 0") : Json(nullptr)}};
    o.text << "  " << d.partition.label() << ": " << to_string(d.p) << " -- " << to_string(d.q);
    if (d.form) o.text << "  {" << format_complex_form(d.form->coefficients()) << " = 0}";
    o.text << "\n";
    arr.push_back(std::move(e));
  }
  o.json = Json{{"command", "diagonals"}, {"count", ds.size()}, {"diagonals", arr}};
}

void cmd_classify(const Scene& scene, const Options& opt, Output& o) {
  require_ambient3(scene, "classify");
  require_count(scene, 4, "classify");
  const auto& h = single_real(scene, 5, "classify");
  const auto hs = scene.hyperplane_values();
  const Verdict v = classify(hs, h.value, resolve_plan(opt));

  Json evidence = Json::array();
  o.text << "H~ = {" << format_complex_form(v.complex_part.coefficients()) << " = 0}\n";
  for (const auto& t : v.evidence) {
    const std::string a = scene.hyperplanes[t.j].name;
    const std::string b = scene.hyperplanes[t.k].name;
    evidence.push_back(Json{{"triple", {"H~", a, b}}, {"rank", t.rank}});
    o.text << "  (H~, " << a << ", " << b << "): rank " << t.rank << "\n";
  }
  o.text << "verdict: " << to_string(v.tag) << "\n";
  o.json = Json{{"command", "classify"},
                {"verdict", to_string(v.tag)},
                {"complex_part", format_complex_form(v.complex_part.coefficients()) + " = 0"},
                {"evidence", evidence}};
  if (v.witness) {
    o.json["witness"] = to_string(*v.witness);
    o.text << "witness: " << to_string(*v.witness) << "\n";
  }
  if (v.report) {
    o.json["report"] = report_json(*v.report);
    append_report_text(o.text, *v.report);
  }
  if (v.obstruction) {
    o.json["obstruction"] = *v.obstruction;
    o.text << "obstruction: " << *v.obstruction << "\n";
    o.code = v.witness ? kVerificationFailed : kConstructionFailed;
  }
}

HyperplanePair resolve_pair(const Options& opt, std::span<const ComplexHyperplane> hs,
                            const RealSubspace& h) {
  if (!opt.pair.empty()) {
    std::size_t j = 0;
    std::size_t k = 0;
    char comma = 0;
    std::istringstream in(opt.pair);
    if (!(in >> j >> comma >> k) || comma != ',' || !in.eof() || j < 1 || k < 1 || j > 4 ||
        k > 4 || j == k) {
      throw GeometryError("--pair expects two distinct indices in 1..4, e.g. 1,2");
    }
    return {j - 1, k - 1};
  }
  const RealSubspace tilde = realify(extract_complex_hyperplane(h));
  for (const auto& p : index_subsets(4, 2)) {
    if (triple_span_rank(tilde, realify(hs[p[0]]), realify(hs[p[1]])) < kRealDim) {
      return {p[0], p[1]};
    }
  }
  throw GeometryError("every triple (H~, Hj, Hk) is in general position; no witness applies");
}

void cmd_witness(const Scene& scene, const Options& opt, Output& o) {
  require_ambient3(scene, "witness");
  const auto hs = scene.hyperplane_values();
  const Poly exponent = resolve_exponent(opt);
  Scene check;
  check.hyperplanes = scene.hyperplanes;
  bool needs_nonconstant = true;
  std::optional<ExpAffineCurve> curve;
  o.json = Json{{"command", "witness"}, {"theorem", opt.theorem}};

  if (opt.theorem == "2i") {
    if (hs.size() < 5) throw GeometryError("--theorem 2i needs at least 5 hyperplanes");
    curve = witness_thm2i(hs, exponent);
    needs_nonconstant = false;
  } else if (opt.theorem == "2ii") {
    require_count(scene, 4, "--theorem 2ii");
    auto w = witness_thm2ii(hs, exponent);
    curve = w.curve;
    check.real_subspaces.push_back({"H", w.h});
    Json forms = Json::array();
    for (const auto& f : w.h.forms()) forms.push_back(to_string(f) + " = 0");
    o.json["real_subspace"] = forms;
    o.text << "H: ";
    for (std::size_t i = 0; i < forms.size(); ++i) {
      o.text << (i ? "; " : "") << forms[i].get<std::string>();
    }
    o.text << "\n";
  } else if (opt.theorem == "3.2") {
    require_count(scene, 4, "--theorem 3.2");
    const auto& h = single_real(scene, 5, "--theorem 3.2");
    curve = witness_thm3_2(hs, h.value, resolve_pair(opt, hs, h.value), exponent);
    check.real_subspaces.push_back(h);
  } else if (opt.theorem == "opt") {
    require_count(scene, 3, "--theorem opt");
    const auto& h = single_real(scene, 5, "--theorem opt");
    curve = witness_optimality(hs, h.value, exponent);
    check.real_subspaces.push_back(h);
  } else {
    throw GeometryError("unknown theorem '" + opt.theorem + "'");
  }

  const auto report = verify(*curve, check, resolve_plan(opt), "witness");
  o.json["curve"] = to_string(*curve);
  o.json["report"] = report_json(report);
  o.text << "curve: " << to_string(*curve) << "\n";
  append_report_text(o.text, report);
  if (!report.all_avoided() || (needs_nonconstant && report.projection_constant)) {
    o.code = kVerificationFailed;
  }
}

void cmd_verify(const Scene& scene, const Options& opt, Output& o) {
  const auto report = verify(scene.curve(opt.curve), scene, resolve_plan(opt), opt.curve);
  o.json = report_json(report);
  append_report_text(o.text, report);
  if (!report.all_avoided()) o.code = kVerificationFailed;
}

void cmd_project(const Scene& scene, const Options& opt, Output& o) {
  const auto& f = scene.curve(opt.curve);
  const Complex t = parse_gaussian(opt.at).to_complex();
  const auto point = projective_value(f, t);
  Json coords = Json::array();
  o.text << "pi(" << opt.curve << ")(" << opt.at << ") = [";
  for (std::size_t i = 0; i < point.size(); ++i) {
    coords.push_back(complex_json(point[i]));
    o.text << (i ? " : " : "") << point[i].real();
    if (point[i].imag() != 0.0) {
      o.text << (point[i].imag() < 0 ? "-" : "+") << std::abs(point[i].imag()) << "i";
    }
  }
  o.text << "]\n";
  o.json = Json{{"command", "project"},
                {"curve", opt.curve},
                {"at", complex_json(t)},
                {"point", coords},
                {"projection_constant", is_projectively_constant(f)}};
}

void add_plan_flags(CLI::App* app, Options& o) {
  app->add_option("--radius", o.plan.disk_radius, "sampling disk radius")->check(CLI::PositiveNumber);
  app->add_option("--grid", o.plan.grid_points, "grid points per axis");
  app->add_option("--random", o.plan.random_points, "random sample count");
  app->add_option("--seed", o.seed, "random seed (overrides AVOIDANCE_SEED)");
  app->add_option("--tol", o.plan.tolerance, "violation tolerance")->check(CLI::PositiveNumber);
  app->add_option("--workers", o.plan.workers, "threads for the margin scan");
  app->add_flag("!--no-targeted", o.plan.targeted, "disable targeted samples");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact and sampled checks for entire curves avoiding hyperplane arrangements",
               "avoidance"};
  app.require_subcommand(1);
  app.fallthrough();
  auto* json_flag = app.add_flag("--json", "JSON output (default)");
  app.add_flag("--human", opt.human, "human-readable output")->excludes(json_flag);

  auto scene_arg = [&](CLI::App* sub) {
    sub->add_option("scene", opt.scene_path, "scene file")->required();
  };

  auto* gp = app.add_subcommand("gp-check", "general position test for the codim-2 family");
  scene_arg(gp);
  auto* diag = app.add_subcommand("diagonals", "enumerate the diagonals of 2n hyperplanes");
  scene_arg(diag);
  auto* cls = app.add_subcommand("classify", "decide which case applies to H1..H4 and H");
  scene_arg(cls);
  add_plan_flags(cls, opt);
  auto* wit = app.add_subcommand("witness", "construct and verify a witness curve");
  scene_arg(wit);
  wit->add_option("--theorem", opt.theorem, "which construction")
      ->required()
      ->check(CLI::IsMember({"2i", "2ii", "3.2", "opt"}));
  wit->add_option("--pair", opt.pair, "1-based hyperplane pair j,k for 3.2");
  wit->add_option("--exponent", opt.exponent, "polynomial exponent (default z)");
  add_plan_flags(wit, opt);
  auto* ver = app.add_subcommand("verify", "verify a named curve against the scene");
  scene_arg(ver);
  ver->add_option("--curve", opt.curve, "curve name")->required();
  add_plan_flags(ver, opt);
  auto* proj = app.add_subcommand("project", "evaluate the projected curve at a point");
  scene_arg(proj);
  proj->add_option("--curve", opt.curve, "curve name")->required();
  proj->add_option("--at", opt.at, "parameter value such as 1/2+i")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  Output o;
  try {
    const Scene scene = load_scene(opt.scene_path);
    if (gp->parsed()) {
      cmd_gp_check(scene, o);
    } else if (diag->parsed()) {
      cmd_diagonals(scene, o);
    } else if (cls->parsed()) {
      cmd_classify(scene, opt, o);
    } else if (wit->parsed()) {
      cmd_witness(scene, opt, o);
    } else if (ver->parsed()) {
      cmd_verify(scene, opt, o);
    } else {
      cmd_project(scene, opt, o);
    }
  } catch (const ParseError& e) {
    err << "error: " << opt.scene_path << ": " << e.what() << "\n";
    return kInputError;
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << "\n";
    return kConstructionFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (opt.human) {
    out << o.text.str();
  } else {
    out << o.json.dump(2) << "\n";
  }
  return o.code;
}

}  // namespace avoidance::cli
