#include "avoidance/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "avoidance/errors.hpp"
#include "avoidance/witness.hpp"
#include "json.hpp"

namespace avoidance {
namespace {

using CVec = std::vector<Complex>;

constexpr int kBisectionSteps = 52;
constexpr int kPolishIterations = 60;
constexpr std::size_t kPolishStarts = 16;
constexpr std::size_t kProjectionCandidates = 64;

struct NumericForm {
  CVec beta;
  double norm;
};

std::vector<NumericForm> numeric_forms(const SetProbe& probe) {
  std::vector<NumericForm> out;
  for (const auto& b : probe.real_forms) {
    NumericForm nf;
    double n2 = 0.0;
    for (const auto& x : b) {
      nf.beta.push_back(x.to_complex());
      n2 += std::norm(nf.beta.back());
    }
    nf.norm = std::sqrt(n2);
    out.push_back(std::move(nf));
  }
  return out;
}

Complex evaluate_form(const CVec& beta, const CVec& v) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < beta.size(); ++i) s += beta[i] * v[i];
  return s;
}

double vec_norm(const CVec& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

double margin_of(const std::vector<NumericForm>& forms, const CVec& value) {
  const double fn = vec_norm(value);
  if (!(fn > 0.0) || !std::isfinite(fn)) return 0.0;
  double m = 0.0;
  for (const auto& nf : forms) {
    m = std::max(m, std::abs(evaluate_form(nf.beta, value).real()) / (nf.norm * fn));
  }
  return m;
}

double margin_at(const ExpAffineCurve& f, const std::vector<NumericForm>& forms, Complex t) {
  return margin_of(forms, f.evaluate_scaled(t).value);
}

bool inside(Complex t, double radius) { return std::abs(t) <= radius * (1.0 + 1e-12); }

struct Grid {
  std::size_t n = 0;
  std::vector<Complex> points;            // row-major n x n
  std::vector<bool> in_disk;
};

Grid make_grid(const SamplingPlan& plan) {
  Grid g;
  g.n = plan.grid_points;
  const double r = plan.disk_radius;
  for (std::size_t j = 0; j < g.n; ++j) {
    for (std::size_t i = 0; i < g.n; ++i) {
      const double x = g.n == 1 ? 0.0 : -r + 2.0 * r * static_cast<double>(i) / static_cast<double>(g.n - 1);
      const double y = g.n == 1 ? 0.0 : -r + 2.0 * r * static_cast<double>(j) / static_cast<double>(g.n - 1);
      g.points.emplace_back(x, y);
      g.in_disk.push_back(inside(g.points.back(), r));
    }
  }
  return g;
}

// Zero crossings of each single form along grid edges.
std::vector<Complex> bisect_crossings(const ExpAffineCurve& f, const std::vector<NumericForm>& forms,
                                      const Grid& grid, const std::vector<CVec>& grid_values) {
  std::vector<Complex> out;
  const std::size_t n = grid.n;
  for (const auto& nf : forms) {
    auto value = [&](Complex t) { return evaluate_form(nf.beta, f.evaluate_scaled(t).value).real(); };
    std::vector<double> sign_val(grid.points.size(), 0.0);
    for (std::size_t k = 0; k < grid.points.size(); ++k) {
      if (grid.in_disk[k]) sign_val[k] = evaluate_form(nf.beta, grid_values[k]).real();
    }
    auto edge = [&](std::size_t a, std::size_t b) {
      if (!grid.in_disk[a] || !grid.in_disk[b]) return;
      const double va = sign_val[a];
      const double vb = sign_val[b];
      if (!(va < 0.0 && vb > 0.0) && !(va > 0.0 && vb < 0.0)) return;
      Complex lo = grid.points[a];
      Complex hi = grid.points[b];
      const bool lo_negative = va < 0.0;
      for (int s = 0; s < kBisectionSteps; ++s) {
        const Complex mid = 0.5 * (lo + hi);
        const double vm = value(mid);
        if (vm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((vm < 0.0) == lo_negative) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      out.push_back(0.5 * (lo + hi));
    };
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = j * n + i;
        if (i + 1 < n) edge(k, k + 1);
        if (j + 1 < n) edge(k, k + n);
      }
    }
  }
  return out;
}

// Gauss-Newton on the normalized residuals Re(beta_k . f(t)) / |beta_k|.
Complex polish(const ExpAffineCurve& f, const std::vector<NumericForm>& forms, Complex start,
               double radius) {
  Complex t = start;
  Complex best = start;
  double best_margin = margin_at(f, forms, start);
  for (int it = 0; it < kPolishIterations && best_margin > 0.0; ++it) {
    const auto s = f.evaluate_scaled(t);
    double a11 = 0, a12 = 0, a22 = 0, b1 = 0, b2 = 0;
    for (const auto& nf : forms) {
      const double r = evaluate_form(nf.beta, s.value).real() / nf.norm;
      const Complex g = evaluate_form(nf.beta, s.derivative) / nf.norm;
      const double jx = g.real();
      const double jy = -g.imag();
      a11 += jx * jx;
      a12 += jx * jy;
      a22 += jy * jy;
      b1 -= jx * r;
      b2 -= jy * r;
    }
    const double damp = 1e-12 * (a11 + a22) + std::numeric_limits<double>::min();
    a11 += damp;
    a22 += damp;
    const double det = a11 * a22 - a12 * a12;
    if (!(std::abs(det) > 0.0) || !std::isfinite(det)) break;
    Complex step((a22 * b1 - a12 * b2) / det, (a11 * b2 - a12 * b1) / det);
    const double len = std::abs(step);
    if (!std::isfinite(len)) break;
    if (len > radius / 4.0) step *= (radius / 4.0) / len;
    t += step;
    if (!inside(t, radius)) break;
    const double m = margin_at(f, forms, t);
    if (m < best_margin) {
      best_margin = m;
      best = t;
    }
    if (len < 1e-15 * (1.0 + std::abs(t))) break;
  }
  return best;
}

struct Scan {
  double margin = std::numeric_limits<double>::infinity();
  std::size_t index = 0;
};

// Order-independent reduction: smallest margin, ties broken by sample index.
Scan scan(const ExpAffineCurve& f, const std::vector<NumericForm>& forms,
          const std::vector<Complex>& samples, std::size_t workers) {
  workers = std::max<std::size_t>(1, std::min(workers, samples.size()));
  std::vector<Scan> partial(workers);
  auto run = [&](std::size_t w) {
    const std::size_t lo = samples.size() * w / workers;
    const std::size_t hi = samples.size() * (w + 1) / workers;
    Scan best;
    for (std::size_t k = lo; k < hi; ++k) {
      const double m = margin_at(f, forms, samples[k]);
      if (m < best.margin || (m == best.margin && k < best.index)) best = {m, k};
    }
    partial[w] = best;
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& th : threads) th.join();
  }
  Scan out;
  for (const auto& p : partial) {
    if (p.margin < out.margin || (p.margin == out.margin && p.index < out.index)) out = p;
  }
  return out;
}

double wedge_norm(const CVec& u, const CVec& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) s += std::norm(u[i] * v[j] - u[j] * v[i]);
  }
  return std::sqrt(s);
}

nlohmann::ordered_json complex_json(Complex z) { return nlohmann::ordered_json::array({z.real(), z.imag()}); }

}  // namespace

void SamplingPlan::validate() const {
  if (!(disk_radius > 0.0) || !std::isfinite(disk_radius)) throw GeometryError("disk radius must be positive");
  if (grid_points < 2) throw GeometryError("grid needs at least 2 points per axis");
  if (random_points == 0) throw GeometryError("random point count must be positive");
  if (!(tolerance > 0.0)) throw GeometryError("tolerance must be positive");
  if (workers == 0) throw GeometryError("worker count must be positive");
}

SetProbe probe_for(const std::string& name, const ComplexHyperplane& h) {
  ComplexVector im_form;
  for (const auto& a : h.coefficients()) im_form.push_back(Gaussian(0, -1) * a);
  return SetProbe{name, "complex_hyperplane", {h.coefficients(), im_form}};
}

SetProbe probe_for(const std::string& name, const RealSubspace& h) {
  SetProbe p{name, "real_subspace", {}};
  for (const auto& form : h.forms()) p.real_forms.push_back(form.as_complex());
  return p;
}

double relative_margin(const ExpAffineCurve& f, const SetProbe& probe, Complex t) {
  return margin_at(f, numeric_forms(probe), t);
}

std::string to_string(Method m) { return m == Method::Exact ? "exact" : "sampled"; }

std::string to_string(SetVerdict v) {
  switch (v) {
    case SetVerdict::Avoided:
      return "avoided";
    case SetVerdict::Violated:
      return "violated";
    case SetVerdict::ExactZeroSetHit:
      return "exact-zero-set-hit";
  }
  return "unknown";
}

bool VerificationReport::all_avoided() const {
  return std::all_of(sets.begin(), sets.end(),
                     [](const SetResult& s) { return s.verdict == SetVerdict::Avoided; });
}

const SetResult& VerificationReport::result(const std::string& set) const {
  for (const auto& s : sets) {
    if (s.set == set) return s;
  }
  throw std::out_of_range("no set named '" + set + "' in report");
}

std::vector<Complex> base_samples(const SamplingPlan& plan) {
  plan.validate();
  std::vector<Complex> out;
  const Grid g = make_grid(plan);
  for (std::size_t k = 0; k < g.points.size(); ++k) {
    if (g.in_disk[k]) out.push_back(g.points[k]);
  }
  std::mt19937_64 rng(plan.seed);
  std::uniform_real_distribution<double> coord(-plan.disk_radius, plan.disk_radius);
  std::size_t added = 0;
  while (added < plan.random_points) {
    const Complex t(coord(rng), coord(rng));
    if (!inside(t, plan.disk_radius)) continue;
    out.push_back(t);
    ++added;
  }
  return out;
}

std::vector<Complex> projective_value(const ExpAffineCurve& f, Complex t) {
  CVec v = f.evaluate_scaled(t).value;
  const double scale = vec_norm(v);
  if (!(scale > 0.0)) throw GeometryError("projection undefined at origin");
  for (const auto& x : v) {
    if (std::abs(x) > 1e-12 * scale) {
      const Complex pivot = x;
      for (auto& y : v) y /= pivot;
      break;
    }
  }
  return v;
}

VerificationReport verify(const ExpAffineCurve& f, const Scene& scene, const SamplingPlan& plan,
                          const std::string& curve_name) {
  plan.validate();
  VerificationReport report;
  report.curve = curve_name;

  struct Pending {
    std::size_t result_index;
    SetProbe probe;
  };
  std::vector<Pending> sampled;

  for (const auto& h : scene.hyperplanes) {
    if (h.value.dimension() != f.dimension()) {
      throw GeometryError("hyperplane " + h.name + " and curve have different dimensions");
    }
    SetResult r;
    r.set = h.name;
    r.kind = "complex_hyperplane";
    switch (is_nowhere_zero(apply_form(h.value, f))) {
      case NowhereZero::Yes:
        r.verdict = SetVerdict::Avoided;
        break;
      case NowhereZero::No:
        r.verdict = SetVerdict::ExactZeroSetHit;
        r.violation_sample = Complex(0.0, 0.0);
        break;
      case NowhereZero::Unknown:
        r.method = Method::Sampled;
        sampled.push_back({report.sets.size(), probe_for(h.name, h.value)});
        break;
    }
    report.sets.push_back(std::move(r));
  }

  for (const auto& h : scene.real_subspaces) {
    if (f.dimension() != 3) throw GeometryError("real subspaces need a curve in C^3");
    SetResult r;
    r.set = h.name;
    r.kind = "real_subspace";
    bool any_nonzero_constant = false;
    bool all_zero = true;
    for (const auto& form : h.value.forms()) {
      const auto kind = real_part_kind(apply_form(std::span<const Gaussian>(form.as_complex()), f));
      any_nonzero_constant = any_nonzero_constant || kind == RealPartKind::NonzeroConstant;
      all_zero = all_zero && kind == RealPartKind::IdenticallyZero;
    }
    if (any_nonzero_constant) {
      r.verdict = SetVerdict::Avoided;
    } else if (all_zero) {
      r.verdict = SetVerdict::ExactZeroSetHit;
      r.violation_sample = Complex(0.0, 0.0);
    } else {
      r.method = Method::Sampled;
      sampled.push_back({report.sets.size(), probe_for(h.name, h.value)});
    }
    report.sets.push_back(std::move(r));
  }

  if (!sampled.empty()) {
    const std::vector<Complex> base = base_samples(plan);
    const Grid grid = plan.targeted ? make_grid(plan) : Grid{};
    std::vector<CVec> grid_values;
    for (std::size_t k = 0; k < grid.points.size(); ++k) {
      grid_values.push_back(grid.in_disk[k] ? f.evaluate_scaled(grid.points[k]).value : CVec{});
    }

    for (const auto& pending : sampled) {
      SetResult& r = report.sets[pending.result_index];
      const auto forms = numeric_forms(pending.probe);
      std::vector<Complex> samples = base;
      if (plan.targeted) {
        std::vector<Complex> extra = bisect_crossings(f, forms, grid, grid_values);
        // Polish the closest approaches found so far.
        std::vector<std::pair<double, std::size_t>> ranked;
        std::vector<Complex> pool = samples;
        pool.insert(pool.end(), extra.begin(), extra.end());
        for (std::size_t k = 0; k < pool.size(); ++k) ranked.emplace_back(margin_at(f, forms, pool[k]), k);
        const std::size_t starts = std::min(kPolishStarts, ranked.size());
        std::partial_sort(ranked.begin(), ranked.begin() + static_cast<long>(starts), ranked.end());
        for (std::size_t s = 0; s < starts; ++s) {
          extra.push_back(polish(f, forms, pool[ranked[s].second], plan.disk_radius));
        }
        r.targeted_samples = extra.size();
        r.targeted_points = extra;
        samples.insert(samples.end(), extra.begin(), extra.end());
      }
      const Scan best = scan(f, forms, samples, plan.workers);
      r.samples = samples.size();
      r.min_margin = best.margin;
      if (best.margin <= plan.tolerance) {
        r.verdict = SetVerdict::Violated;
        r.violation_sample = samples[best.index];
      } else {
        r.verdict = SetVerdict::Avoided;
      }
    }
  }

  report.projection_constant = is_projectively_constant(f);
  std::optional<ProjectionValue> first;
  for (std::size_t c = 0; c < kProjectionCandidates; ++c) {
    const Complex t = gaussian_at(c).to_complex();
    const CVec v = f.evaluate_scaled(t).value;
    if (!(vec_norm(v) > 0.0)) continue;
    ProjectionValue pv{t, projective_value(f, t)};
    if (!first) {
      first = pv;
      report.projection_values.push_back(pv);
      if (report.projection_constant) break;
      continue;
    }
    const double w = wedge_norm(first->point, pv.point) / (vec_norm(first->point) * vec_norm(pv.point));
    if (w > 1e-9) {
      report.projection_values.push_back(pv);
      break;
    }
  }
  return report;
}

std::string to_json(const VerificationReport& r, int indent) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["curve"] = r.curve;
  ordered_json sets = ordered_json::array();
  for (const auto& s : r.sets) {
    ordered_json e;
    e["set"] = s.set;
    e["kind"] = s.kind;
    e["method"] = to_string(s.method);
    e["verdict"] = to_string(s.verdict);
    e["min_margin"] = s.min_margin ? ordered_json(*s.min_margin) : ordered_json(nullptr);
    e["violation_sample"] =
        s.violation_sample ? complex_json(*s.violation_sample) : ordered_json(nullptr);
    e["samples"] = s.samples;
    e["targeted_samples"] = s.targeted_samples;
    sets.push_back(std::move(e));
  }
  j["sets"] = std::move(sets);
  j["projection_constant"] = r.projection_constant;
  ordered_json values = ordered_json::array();
  for (const auto& pv : r.projection_values) {
    ordered_json point = ordered_json::array();
    for (const auto& x : pv.point) point.push_back(complex_json(x));
    values.push_back(ordered_json{{"at", complex_json(pv.at)}, {"point", std::move(point)}});
  }
  j["projection_values"] = std::move(values);
  j["all_avoided"] = r.all_avoided();
  return j.dump(indent);
}

std::string to_human(const VerificationReport& r) {
  std::ostringstream out;
  out << std::setprecision(6);
  out << "curve " << (r.curve.empty() ? "<unnamed>" : r.curve) << "\n";
  for (const auto& s : r.sets) {
    out << "  " << s.set << " (" << s.kind << "): " << to_string(s.method) << " "
        << to_string(s.verdict);
    if (s.min_margin) out << ", min margin " << *s.min_margin << " over " << s.samples << " samples";
    if (s.violation_sample) out << ", at z = " << s.violation_sample->real() << (s.violation_sample->imag() < 0 ? " - " : " + ") << std::abs(s.violation_sample->imag()) << "i";
    out << "\n";
  }
  out << "  projection " << (r.projection_constant ? "constant" : "non-constant");
  for (const auto& pv : r.projection_values) {
    out << "; pi(f)(" << pv.at.real() << (pv.at.imag() < 0 ? "-" : "+") << std::abs(pv.at.imag()) << "i) = [";
    for (std::size_t i = 0; i < pv.point.size(); ++i) {
      if (i) out << " : ";
      out << pv.point[i].real();
      if (pv.point[i].imag() != 0.0) out << (pv.point[i].imag() < 0 ? "-" : "+") << std::abs(pv.point[i].imag()) << "i";
    }
    out << "]";
  }
  out << "\n";
  return out.str();
}

}  // namespace avoidance
