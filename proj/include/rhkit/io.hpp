#pragma once

// JSON encodings of the library's value types. Parsing is strict: unknown
// keys, missing required keys and wrong types raise std::invalid_argument.

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "rhkit/eos.hpp"
#include "rhkit/kinematics.hpp"
#include "rhkit/riemann.hpp"
#include "rhkit/shock.hpp"
#include "rhkit/state.hpp"

namespace rhkit::io {

using nlohmann::json;

inline void require_keys(const json& j, std::string_view what, std::initializer_list<std::string_view> allowed,
                         std::initializer_list<std::string_view> required = {}) {
  if (!j.is_object()) throw std::invalid_argument(std::string(what) + ": expected a JSON object");
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw std::invalid_argument(std::string(what) + ": unknown key \"" + key + "\"");
  }
  for (auto r : required)
    if (!j.contains(std::string(r)))
      throw std::invalid_argument(std::string(what) + ": missing key \"" + std::string(r) + "\"");
}

inline double number(const json& j, std::string_view key) {
  const json& v = j.at(std::string(key));
  if (!v.is_number()) throw std::invalid_argument("\"" + std::string(key) + "\" must be a number");
  return v.get<double>();
}

inline Vec3 vec3(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected an array of 3 numbers");
  Vec3 v;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_number()) throw std::invalid_argument("expected an array of 3 numbers");
    v(i) = j[i].get<double>();
  }
  return v;
}

template <class Derived>
json to_json_array(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() == 1 || m.cols() == 1) {
    json a = json::array();
    for (Eigen::Index i = 0; i < m.size(); ++i) a.push_back(m(i));
    return a;
  }
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

template <int N>
Eigen::Matrix<double, N, N> matrix(const json& j) {
  if (!j.is_array() || j.size() != N) throw std::invalid_argument("expected a square matrix as nested arrays");
  Eigen::Matrix<double, N, N> m;
  for (int r = 0; r < N; ++r) {
    if (!j[r].is_array() || j[r].size() != N) throw std::invalid_argument("matrix row has the wrong length");
    for (int c = 0; c < N; ++c) {
      if (!j[r][c].is_number()) throw std::invalid_argument("matrix entries must be numbers");
      m(r, c) = j[r][c].get<double>();
    }
  }
  return m;
}

// {"kind":"ideal_gas","gamma":1.4,"c_v":1.0,"K":1.0}
// {"kind":"stiffened_gas","gamma":4.4,"c_v":1.0,"K":1.0,"p_inf":6000}
inline Eos eos_from_json(const json& j) {
  require_keys(j, "eos", {"kind", "gamma", "c_v", "K", "p_inf"}, {"kind", "gamma", "c_v", "K"});
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "ideal_gas") {
    if (j.contains("p_inf")) throw std::invalid_argument("eos: p_inf is not a parameter of ideal_gas");
    return Eos::ideal_gas(number(j, "gamma"), number(j, "c_v"), number(j, "K"));
  }
  if (kind == "stiffened_gas") {
    if (!j.contains("p_inf")) throw std::invalid_argument("eos: stiffened_gas requires p_inf");
    return Eos::stiffened_gas(number(j, "gamma"), number(j, "c_v"), number(j, "K"), number(j, "p_inf"));
  }
  throw std::invalid_argument("eos: unknown kind \"" + kind + "\"");
}

inline json to_json(const Eos& eos) {
  json j{{"kind", to_string(eos.kind)}, {"gamma", eos.gamma}, {"c_v", eos.c_v}, {"K", eos.K}};
  if (eos.kind == EosKind::StiffenedGas) j["p_inf"] = eos.p_inf;
  return j;
}

/// {"rho": number, "v": [3 numbers], "s": number, "omega": number}; "p" may
/// replace "s", in which case the entropy is derived through the Eos.
inline FluidState state_from_json(const json& j, const Eos& eos) {
  require_keys(j, "state", {"rho", "v", "s", "p", "omega"}, {"rho", "v"});
  const bool has_s = j.contains("s");
  const bool has_p = j.contains("p");
  if (has_s == has_p) throw std::invalid_argument("state: exactly one of \"s\" and \"p\" is required");
  FluidState st;
  st.rho = number(j, "rho");
  st.v = vec3(j.at("v"));
  st.omega = j.contains("omega") ? number(j, "omega") : 0.0;
  st.s = has_s ? number(j, "s") : entropy_from_pressure(eos, st.rho, number(j, "p"));
  return st;
}

inline json to_json(const FluidState& st) {
  return json{{"rho", st.rho}, {"v", to_json_array(st.v)}, {"s", st.s}, {"omega", st.omega}};
}

/// State plus its derived thermodynamics, for reports.
inline json state_report(const FluidState& st, const Eos& eos) {
  const ThermoPoint th = st.thermo(eos);
  json j = to_json(st);
  j["p"] = th.p;
  j["h"] = th.h;
  j["theta"] = th.theta;
  j["c"] = std::sqrt(th.c2);
  return j;
}

inline json to_json(const SurfaceFrame& f) {
  return json{{"normal", to_json_array(f.n())}, {"D_n", f.D_n()}};
}

inline json to_json(const ShockPair& pair) {
  return json{{"up", to_json(pair.up)},        {"down", to_json(pair.down)},
              {"normal", to_json_array(pair.frame.n())}, {"D_n", pair.frame.D_n()},
              {"F_up", to_json_array(pair.F_up)}, {"F_down", to_json_array(pair.F_down)},
              {"f_ref", pair.f_ref},          {"w", to_json_array(pair.w)}};
}

/// Reads {"up", "down", "normal", "D_n", "F_up"?}; the closure is recomputed,
/// so stored F_down / f_ref / w values are accepted but ignored.
inline ShockPair pair_from_json(const json& j, const Eos& eos) {
  require_keys(j, "pair", {"up", "down", "normal", "D_n", "F_up", "F_down", "f_ref", "w"},
               {"up", "down", "normal", "D_n"});
  const FluidState up = state_from_json(j.at("up"), eos);
  const FluidState down = state_from_json(j.at("down"), eos);
  const SurfaceFrame frame(vec3(j.at("normal")), number(j, "D_n"));
  const Mat3 F_up = j.contains("F_up") ? matrix<3>(j.at("F_up")) : Mat3::Identity();
  return make_shock_pair(up, down, frame, F_up);
}

inline json to_json(const RhResiduals& r) {
  return json{{"mass", r.mass},
              {"momentum_n", r.momentum_n},
              {"vel", to_json_array(r.vel)},
              {"energy", r.energy},
              {"norm", r.norm()}};
}

inline json to_json(const LaxReport& l) {
  return json{{"admissible", l.admissible}, {"is_shock", l.is_shock},   {"u_up", l.u_up},
              {"c_up", l.c_up},             {"u_down", l.u_down},       {"c_down", l.c_down},
              {"entropy_jump", l.entropy_jump}, {"verdict", l.verdict}};
}

inline json to_json(const RiemannSolution& s) {
  return json{{"p_star", s.p_star},
              {"u_star", s.u_star},
              {"wave_left", to_string(s.wave_left)},
              {"wave_right", to_string(s.wave_right)},
              {"rho_star_left", s.rho_star_left},
              {"rho_star_right", s.rho_star_right},
              {"left_head", s.left_head},
              {"left_tail", s.left_tail},
              {"right_head", s.right_head},
              {"right_tail", s.right_tail}};
}

}  // namespace rhkit::io
