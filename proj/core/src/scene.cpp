#include "avoidance/scene.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "avoidance/errors.hpp"

namespace avoidance {
namespace {

enum class TokenKind { Number, Ident, Symbol, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> lex(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      out.push_back({TokenKind::Number, std::string(line.substr(start, i - start)), start + 1});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) {
        ++i;
      }
      out.push_back({TokenKind::Ident, std::string(line.substr(start, i - start)), start + 1});
    } else if (std::string_view("+-*/()^,;:=").find(c) != std::string_view::npos) {
      out.push_back({TokenKind::Symbol, std::string(1, c), start + 1});
      ++i;
    } else {
      throw ParseError(line_no, start + 1, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({TokenKind::End, "", line.size() + 1});
  return out;
}

enum class Ctx { ComplexForm, RealForm, Poly, ExpSum, Constant };

// One product term of a sum: coefficient times at most one non-constant atom.
struct Mono {
  enum class Kind { Const, Var, Power, Exp };
  Gaussian coef{1};
  Kind kind = Kind::Const;
  std::string var;
  std::size_t power = 0;
  Poly exponent;
};

const char* const kRealVars[kRealDim] = {"x1", "y1", "x2", "y2", "x3", "y3"};

std::optional<std::size_t> complex_var_index(const std::string& s) {
  if (s.size() < 2 || s[0] != 'z') return std::nullopt;
  if (!std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return std::nullopt;
  }
  if (s[1] == '0' || s.size() > 4) return std::nullopt;
  return std::stoul(s.substr(1)) - 1;
}

std::optional<std::size_t> real_var_index(const std::string& s) {
  for (std::size_t i = 0; i < kRealDim; ++i) {
    if (s == kRealVars[i]) return i;
  }
  return std::nullopt;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::size_t line_no)
      : tokens_(std::move(tokens)), line_(line_no) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at_symbol(char c) const {
    return peek().kind == TokenKind::Symbol && peek().text[0] == c;
  }
  bool at_end() const { return peek().kind == TokenKind::End; }
  Token take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(peek().column, msg); }
  [[noreturn]] void fail_at(std::size_t col, const std::string& msg) const {
    throw ParseError(line_, col, msg);
  }

  void expect_symbol(char c) {
    if (!at_symbol(c)) fail(std::string("expected '") + c + "'" + found());
    take();
  }

  std::string expect_ident(const char* what) {
    if (peek().kind != TokenKind::Ident) fail(std::string("expected ") + what + found());
    return take().text;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input" + found());
  }

  void expect_equals_zero() {
    expect_symbol('=');
    if (peek().kind != TokenKind::Number || peek().text.find_first_not_of('0') != std::string::npos) {
      fail("right-hand side must be 0" + found());
    }
    take();
  }

  std::string found() const {
    return at_end() ? " but reached end of line" : " but found '" + peek().text + "'";
  }

  std::vector<Mono> parse_sum(Ctx ctx) {
    std::vector<Mono> out;
    bool negative = false;
    if (at_symbol('+') || at_symbol('-')) negative = take().text == "-";
    while (true) {
      Mono m = parse_product(ctx);
      if (negative) m.coef = -m.coef;
      out.push_back(std::move(m));
      if (at_symbol('+') || at_symbol('-')) {
        negative = take().text == "-";
      } else {
        break;
      }
    }
    return out;
  }

  Gaussian parse_constant() {
    Gaussian g(0);
    for (const auto& m : parse_sum(Ctx::Constant)) g += m.coef;
    return g;
  }

 private:
  bool starts_factor() const {
    return peek().kind == TokenKind::Number || peek().kind == TokenKind::Ident || at_symbol('(');
  }

  Mono parse_product(Ctx ctx) {
    Mono acc = parse_factor(ctx);
    while (at_symbol('*') || starts_factor()) {
      if (at_symbol('*')) take();
      const std::size_t fcol = peek().column;
      Mono next = parse_factor(ctx);
      acc.coef *= next.coef;
      if (next.kind == Mono::Kind::Const) continue;
      if (acc.kind == Mono::Kind::Const) {
        next.coef = acc.coef;
        acc = std::move(next);
      } else if (acc.kind == Mono::Kind::Power && next.kind == Mono::Kind::Power) {
        acc.power += next.power;
      } else if (acc.kind == Mono::Kind::Exp && next.kind == Mono::Kind::Exp) {
        acc.exponent = acc.exponent + next.exponent;
      } else {
        fail_at(fcol, "non-linear product of variables");
      }
    }
    return acc;
  }

  Mono parse_factor(Ctx ctx) {
    const Token t = peek();
    Mono m;
    if (t.kind == TokenKind::Number) {
      take();
      Rational q(t.text, 10);
      if (at_symbol('/')) {
        take();
        if (peek().kind != TokenKind::Number) fail("expected denominator" + found());
        const Token d = take();
        if (d.text.find_first_not_of('0') == std::string::npos) {
          fail_at(d.column, "zero denominator");
        }
        q = Rational(mpz_class(t.text, 10), mpz_class(d.text, 10));
        q.canonicalize();
      }
      m.coef = Gaussian(q);
      return m;
    }
    if (at_symbol('(')) {
      take();
      m.coef = parse_constant();
      expect_symbol(')');
      return m;
    }
    if (t.kind != TokenKind::Ident) fail("expected a term" + found());
    take();
    if (t.text == "i") {
      m.coef = Gaussian::i();
      return m;
    }
    switch (ctx) {
      case Ctx::ComplexForm:
        if (complex_var_index(t.text)) {
          m.kind = Mono::Kind::Var;
          m.var = t.text;
          return m;
        }
        break;
      case Ctx::RealForm:
        if (real_var_index(t.text)) {
          m.kind = Mono::Kind::Var;
          m.var = t.text;
          return m;
        }
        break;
      case Ctx::Poly:
        if (t.text == "z") {
          m.kind = Mono::Kind::Power;
          m.power = 1;
          if (at_symbol('^')) {
            take();
            if (peek().kind != TokenKind::Number || peek().text.size() > 3) {
              fail("expected a small integer exponent" + found());
            }
            m.power = std::stoul(take().text);
          }
          return m;
        }
        break;
      case Ctx::ExpSum:
        if (t.text == "exp") {
          expect_symbol('(');
          m.kind = Mono::Kind::Exp;
          m.exponent = to_poly(parse_sum(Ctx::Poly));
          expect_symbol(')');
          return m;
        }
        break;
      case Ctx::Constant:
        break;
    }
    fail_at(t.column, "unknown symbol '" + t.text + "' here");
  }

 public:
  static Poly to_poly(const std::vector<Mono>& ms) {
    std::vector<Gaussian> c;
    for (const auto& m : ms) {
      const std::size_t k = m.kind == Mono::Kind::Power ? m.power : 0;
      if (c.size() <= k) c.resize(k + 1, Gaussian(0));
      c[k] += m.coef;
    }
    return Poly(std::move(c));
  }

  std::size_t line() const { return line_; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

LinearFormExpr to_expr(const std::vector<Mono>& ms, Parser& p, std::size_t col, FormKind kind) {
  std::map<std::size_t, Gaussian> by_index;
  std::map<std::size_t, std::string> names;
  for (const auto& m : ms) {
    if (m.kind != Mono::Kind::Var) p.fail_at(col, "linear forms cannot have constant terms");
    const std::size_t idx = kind == FormKind::Complex ? *complex_var_index(m.var)
                                                      : *real_var_index(m.var);
    by_index[idx] += m.coef;
    names[idx] = m.var;
  }
  LinearFormExpr e;
  for (const auto& [idx, c] : by_index) {
    if (!c.is_zero()) e.terms.push_back({c, names[idx]});
  }
  return e;
}

std::string format_terms(const LinearFormExpr& e) {
  std::string out;
  for (const auto& t : e.terms) {
    const Gaussian& a = t.coefficient;
    bool negative = false;
    std::string body;
    if (a.is_real() || sgn(a.re) == 0) {
      const bool neg = a.is_real() ? sgn(a.re) < 0 : sgn(a.im) < 0;
      const Gaussian mag = neg ? -a : a;
      negative = neg;
      body = mag == Gaussian(1) ? t.variable : to_string(mag) + "*" + t.variable;
    } else {
      body = "(" + to_string(a) + ")*" + t.variable;
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out.empty() ? "0" : out;
}

struct RawHyperplane {
  std::string name;
  LinearFormExpr expr;
  std::size_t line;
  std::size_t column;
};

}  // namespace

std::vector<ComplexHyperplane> Scene::hyperplane_values() const {
  std::vector<ComplexHyperplane> out;
  for (const auto& h : hyperplanes) out.push_back(h.value);
  return out;
}

const ExpAffineCurve& Scene::curve(const std::string& name) const {
  for (const auto& c : curves) {
    if (c.name == name) return c.value;
  }
  throw std::out_of_range("no curve named '" + name + "' in scene");
}

LinearFormExpr parse_linear_form(std::string_view text, FormKind kind) {
  Parser p(lex(text, 1), 1);
  const std::size_t col = p.peek().column;
  auto e = to_expr(p.parse_sum(kind == FormKind::Complex ? Ctx::ComplexForm : Ctx::RealForm), p,
                   col, kind);
  p.expect_end();
  return e;
}

std::string to_string(const LinearFormExpr& e) { return format_terms(e); }

Gaussian parse_gaussian(std::string_view text) {
  Parser p(lex(text, 1), 1);
  const Gaussian g = p.parse_constant();
  p.expect_end();
  return g;
}

Poly parse_poly(std::string_view text) {
  Parser p(lex(text, 1), 1);
  const Poly q = Parser::to_poly(p.parse_sum(Ctx::Poly));
  p.expect_end();
  return q;
}

Scene parse_scene(std::string_view text) {
  Scene scene;
  std::set<std::string> names;
  std::vector<RawHyperplane> raw_hyperplanes;
  std::optional<std::size_t> explicit_ambient;
  std::size_t max_index = 0;
  struct PendingCurve {
    std::string name;
    std::vector<ExpSum> comps;
    std::size_t line;
    std::size_t column;
  };
  std::vector<PendingCurve> pending_curves;
  std::size_t first_real_line = 0;

  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    begin = end + 1;

    Parser p(lex(line, line_no), line_no);
    if (p.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    const Token kw = p.peek();
    const std::string keyword = p.expect_ident("a declaration keyword");
    if (keyword == "ambient") {
      if (p.peek().kind != TokenKind::Number || p.peek().text.size() > 2) {
        p.fail("expected the number of complex coordinates" + p.found());
      }
      const std::size_t n = std::stoul(p.take().text);
      if (n < 2) p.fail_at(kw.column, "ambient dimension must be at least 2");
      if (explicit_ambient) p.fail_at(kw.column, "ambient declared twice");
      explicit_ambient = n;
      p.expect_end();
      if (end == text.size()) break;
      continue;
    }
    if (keyword != "hyperplane" && keyword != "real" && keyword != "curve") {
      p.fail_at(kw.column, "unknown declaration '" + keyword + "'");
    }
    const Token name_tok = p.peek();
    const std::string name = p.expect_ident("a name");
    if (!names.insert(name).second) p.fail_at(name_tok.column, "duplicate name '" + name + "'");
    p.expect_symbol(':');

    if (keyword == "hyperplane") {
      const std::size_t col = p.peek().column;
      auto expr = to_expr(p.parse_sum(Ctx::ComplexForm), p, col, FormKind::Complex);
      p.expect_equals_zero();
      p.expect_end();
      if (expr.terms.empty()) p.fail_at(col, "zero form does not define a hyperplane");
      for (const auto& t : expr.terms) max_index = std::max(max_index, *complex_var_index(t.variable) + 1);
      raw_hyperplanes.push_back({name, std::move(expr), line_no, col});
    } else if (keyword == "real") {
      std::vector<RealLinearForm> forms;
      while (true) {
        const std::size_t col = p.peek().column;
        auto expr = to_expr(p.parse_sum(Ctx::RealForm), p, col, FormKind::Real);
        p.expect_equals_zero();
        if (expr.terms.empty()) p.fail_at(col, "zero form does not define a real subspace");
        RealVector v(kRealDim, Rational(0));
        for (const auto& t : expr.terms) v[*real_var_index(t.variable)] = t.coefficient.re;
        for (const auto& t : expr.terms) {
          if (!t.coefficient.is_real()) p.fail_at(col, "real forms need real coefficients");
        }
        forms.emplace_back(std::move(v));
        if (p.at_symbol(';')) {
          p.take();
          continue;
        }
        break;
      }
      p.expect_end();
      try {
        scene.real_subspaces.push_back({name, RealSubspace(std::move(forms))});
      } catch (const GeometryError& e) {
        p.fail_at(name_tok.column, e.what());
      }
      if (first_real_line == 0) first_real_line = line_no;
    } else {
      const std::size_t col = p.peek().column;
      p.expect_symbol('(');
      std::vector<ExpSum> comps;
      while (true) {
        std::vector<ExpPoly> terms;
        for (const auto& m : p.parse_sum(Ctx::ExpSum)) {
          terms.push_back(ExpPoly{m.coef, m.kind == Mono::Kind::Exp ? m.exponent : Poly()});
        }
        comps.emplace_back(std::move(terms));
        if (p.at_symbol(',')) {
          p.take();
          continue;
        }
        break;
      }
      p.expect_symbol(')');
      p.expect_end();
      if (std::all_of(comps.begin(), comps.end(), [](const ExpSum& s) { return s.is_zero(); })) {
        p.fail_at(col, "curve with every component identically zero");
      }
      pending_curves.push_back({name, std::move(comps), line_no, col});
    }
    if (end == text.size()) break;
  }

  if (explicit_ambient && *explicit_ambient < max_index) {
    for (const auto& raw : raw_hyperplanes) {
      for (const auto& t : raw.expr.terms) {
        if (*complex_var_index(t.variable) >= *explicit_ambient) {
          throw ParseError(raw.line, raw.column,
                           "hyperplane uses " + t.variable + " beyond the declared ambient dimension");
        }
      }
    }
  }
  scene.ambient = explicit_ambient.value_or(std::max<std::size_t>(3, max_index));

  for (auto& raw : raw_hyperplanes) {
    ComplexVector coeffs(scene.ambient, Gaussian(0));
    for (const auto& t : raw.expr.terms) coeffs[*complex_var_index(t.variable)] = t.coefficient;
    scene.hyperplanes.push_back({raw.name, ComplexHyperplane(std::move(coeffs))});
  }
  if (!scene.real_subspaces.empty() && scene.ambient != 3) {
    throw ParseError(first_real_line, 1, "dimension mismatch: real subspaces need ambient C^3");
  }
  for (auto& c : pending_curves) {
    if (c.comps.size() != scene.ambient) {
      throw ParseError(c.line, c.column,
                       "dimension mismatch: curve has " + std::to_string(c.comps.size()) +
                           " components, ambient space has " + std::to_string(scene.ambient));
    }
    scene.curves.push_back({c.name, ExpAffineCurve(std::move(c.comps))});
  }
  return scene;
}

Scene load_scene(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot open scene file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scene(ss.str());
}

std::string print_scene(const Scene& s) {
  std::ostringstream out;
  if (s.ambient != 3) out << "ambient " << s.ambient << "\n";
  for (const auto& h : s.hyperplanes) {
    out << "hyperplane " << h.name << ": " << format_complex_form(h.value.coefficients())
        << " = 0\n";
  }
  for (const auto& r : s.real_subspaces) {
    out << "real " << r.name << ": ";
    for (std::size_t i = 0; i < r.value.forms().size(); ++i) {
      if (i) out << "; ";
      out << to_string(r.value.forms()[i]) << " = 0";
    }
    out << "\n";
  }
  for (const auto& c : s.curves) out << "curve " << c.name << ": " << to_string(c.value) << "\n";
  return out.str();
}

}  // namespace avoidance
