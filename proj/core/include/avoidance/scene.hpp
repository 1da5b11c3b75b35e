#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "avoidance/arrangement.hpp"
#include "avoidance/exp_sum.hpp"

namespace avoidance {

template <typename T>
struct Named {
  std::string name;
  T value;

  friend bool operator==(const Named&, const Named&) = default;
};

/// Everything declared in one scene document.
///
///   # comment
///   ambient 4                                  (optional, default 3 or inferred)
///   hyperplane H4: z1 + z2 + z3 = 0
///   hyperplane B: (1/2 - 3i)*z2 = 0
///   real H: x1 - x2 = 0; x1 - x3 = 0
///   curve f: (exp(z), -exp(z), exp(2*z))
///
/// Curve components are sums of COEFF, COEFF*exp(POLY) terms; POLY is a
/// polynomial in z. Rationals are written p/q and the imaginary unit is i.
struct Scene {
  std::size_t ambient = 3;
  std::vector<Named<ComplexHyperplane>> hyperplanes;
  std::vector<Named<RealSubspace>> real_subspaces;
  std::vector<Named<ExpAffineCurve>> curves;

  std::vector<ComplexHyperplane> hyperplane_values() const;
  /// Throws std::out_of_range for an unknown name.
  const ExpAffineCurve& curve(const std::string& name) const;

  friend bool operator==(const Scene&, const Scene&) = default;
};

/// Parsed linear form before it is placed in a coordinate vector.
struct LinearFormExpr {
  struct Term {
    Gaussian coefficient;
    std::string variable;

    friend bool operator==(const Term&, const Term&) = default;
  };
  std::vector<Term> terms;

  friend bool operator==(const LinearFormExpr&, const LinearFormExpr&) = default;
};

enum class FormKind { Complex, Real };

/// Parses "<form>" (no "= 0"). Repeated variables are merged, zero terms dropped,
/// terms sorted by variable. Throws ParseError.
LinearFormExpr parse_linear_form(std::string_view text, FormKind kind);
std::string to_string(const LinearFormExpr& e);

/// Constant such as "1/2 - 3i". Throws ParseError.
Gaussian parse_gaussian(std::string_view text);
/// Polynomial in z such as "2*z^2 + i*z". Throws ParseError.
Poly parse_poly(std::string_view text);

/// Throws ParseError (syntax, zero form, dimension mismatch, duplicate name).
Scene parse_scene(std::string_view text);
/// Reads and parses a file; I/O failures are reported as ParseError at 0:0.
Scene load_scene(const std::filesystem::path& path);
/// Canonical document; parse_scene(print_scene(s)) == s.
std::string print_scene(const Scene& s);

}  // namespace avoidance
