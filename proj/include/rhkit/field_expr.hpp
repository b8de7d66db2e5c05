#pragma once

// Analytic scalar fields on space-time assembled from trig and monomial
// terms, plus the JSON encoding used for user-defined manufactured fields:
//
//   expr  = {"constant": c, "terms": [term, ...]}     (both keys optional)
//   term  = {"kind": "sin" | "cos", "coef": a, "k": [kt, kx, ky, kz], "phase": phi}
//         | {"kind": "monomial", "coef": a, "powers": [pt, px, py, pz]}
//   field = {"rho": expr, "v": [expr, expr, expr], "s": expr, "omega": expr}

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "rhkit/io.hpp"
#include "rhkit/tensors.hpp"

namespace rhkit {

struct FieldTerm {
  enum class Kind { Sin, Cos, Monomial } kind = Kind::Sin;
  double coef = 0.0;
  std::array<double, 4> k{};  // wave vector over (t, x, y, z)
  double phase = 0.0;
  std::array<int, 4> powers{};
};

class FieldExpr {
 public:
  FieldExpr() = default;
  explicit FieldExpr(double constant, std::vector<FieldTerm> terms = {})
      : constant_(constant), terms_(std::move(terms)) {}

  double operator()(double t, const Vec3& x) const {
    const std::array<double, 4> z{t, x(0), x(1), x(2)};
    double sum = constant_;
    for (const FieldTerm& term : terms_) sum += term_value(term, z);
    return sum;
  }

  /// Exact gradient over (t, x, y, z).
  Covec4 gradient(double t, const Vec3& x) const {
    const std::array<double, 4> z{t, x(0), x(1), x(2)};
    Covec4 g = Covec4::Zero();
    for (const FieldTerm& term : terms_) {
      if (term.kind == FieldTerm::Kind::Monomial) {
        for (int a = 0; a < 4; ++a) {
          if (term.powers[a] == 0) continue;
          double prod = term.coef * term.powers[a];
          for (int b = 0; b < 4; ++b) prod *= std::pow(z[b], b == a ? term.powers[b] - 1 : term.powers[b]);
          g(a) += prod;
        }
      } else {
        const double arg = phase_arg(term, z);
        const double d = term.kind == FieldTerm::Kind::Sin ? std::cos(arg) : -std::sin(arg);
        for (int a = 0; a < 4; ++a) g(a) += term.coef * term.k[a] * d;
      }
    }
    return g;
  }

  static FieldExpr from_json(const io::json& j) {
    if (j.is_number()) return FieldExpr(j.get<double>());
    io::require_keys(j, "field expression", {"constant", "terms"});
    FieldExpr e(j.contains("constant") ? io::number(j, "constant") : 0.0);
    if (j.contains("terms")) {
      if (!j.at("terms").is_array()) throw std::invalid_argument("field expression: terms must be an array");
      for (const io::json& t : j.at("terms")) e.terms_.push_back(term_from_json(t));
    }
    return e;
  }

 private:
  static double phase_arg(const FieldTerm& term, const std::array<double, 4>& z) {
    double arg = term.phase;
    for (int a = 0; a < 4; ++a) arg += term.k[a] * z[a];
    return arg;
  }

  static double term_value(const FieldTerm& term, const std::array<double, 4>& z) {
    switch (term.kind) {
      case FieldTerm::Kind::Sin: return term.coef * std::sin(phase_arg(term, z));
      case FieldTerm::Kind::Cos: return term.coef * std::cos(phase_arg(term, z));
      case FieldTerm::Kind::Monomial: {
        double prod = term.coef;
        for (int a = 0; a < 4; ++a) prod *= std::pow(z[a], term.powers[a]);
        return prod;
      }
    }
    return 0.0;
  }

  static FieldTerm term_from_json(const io::json& j) {
    FieldTerm term;
    const std::string kind = j.is_object() && j.contains("kind") ? j.at("kind").get<std::string>() : "";
    if (kind == "sin" || kind == "cos") {
      io::require_keys(j, "trig term", {"kind", "coef", "k", "phase"}, {"kind", "coef", "k"});
      term.kind = kind == "sin" ? FieldTerm::Kind::Sin : FieldTerm::Kind::Cos;
      const io::json& k = j.at("k");
      if (!k.is_array() || k.size() != 4) throw std::invalid_argument("trig term: k needs 4 numbers");
      for (int a = 0; a < 4; ++a) term.k[a] = k[a].get<double>();
      term.phase = j.contains("phase") ? io::number(j, "phase") : 0.0;
    } else if (kind == "monomial") {
      io::require_keys(j, "monomial term", {"kind", "coef", "powers"}, {"kind", "coef", "powers"});
      term.kind = FieldTerm::Kind::Monomial;
      const io::json& p = j.at("powers");
      if (!p.is_array() || p.size() != 4) throw std::invalid_argument("monomial term: powers needs 4 integers");
      for (int a = 0; a < 4; ++a) {
        if (!p[a].is_number_integer() || p[a].get<int>() < 0)
          throw std::invalid_argument("monomial term: powers must be non-negative integers");
        term.powers[a] = p[a].get<int>();
      }
    } else {
      throw std::invalid_argument("field term: kind must be sin, cos or monomial");
    }
    term.coef = io::number(j, "coef");
    return term;
  }

  double constant_ = 0.0;
  std::vector<FieldTerm> terms_;
};

/// Fluid field whose components are each a FieldExpr. The potential
/// gradient is supplied analytically.
struct ExprField {
  FieldExpr rho;
  std::array<FieldExpr, 3> v;
  FieldExpr s;
  FieldExpr omega;

  SmoothField smooth_field() const {
    SmoothField f;
    f.state = [*this](double t, const Vec3& x) {
      FluidState st;
      st.rho = rho(t, x);
      st.v = Vec3(v[0](t, x), v[1](t, x), v[2](t, x));
      st.s = s(t, x);
      st.omega = omega(t, x);
      return st;
    };
    f.potential_gradient = [om = omega](double t, const Vec3& x) { return om.gradient(t, x); };
    return f;
  }

  static ExprField from_json(const io::json& j) {
    io::require_keys(j, "field", {"rho", "v", "s", "omega"}, {"rho", "v", "s"});
    ExprField f;
    f.rho = FieldExpr::from_json(j.at("rho"));
    const io::json& v = j.at("v");
    if (!v.is_array() || v.size() != 3) throw std::invalid_argument("field: v needs 3 expressions");
    for (int i = 0; i < 3; ++i) f.v[i] = FieldExpr::from_json(v[i]);
    f.s = FieldExpr::from_json(j.at("s"));
    if (j.contains("omega")) f.omega = FieldExpr::from_json(j.at("omega"));
    return f;
  }
};

}  // namespace rhkit
