#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rhkit/field_expr.hpp"
#include "rhkit/fields.hpp"
#include "rhkit/io.hpp"
#include "rhkit/rhkit.hpp"

namespace rhkit::cli {
namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> tol{
      {"rh", 1e-10},           {"spacetime_term", 1e-10},    {"reference_term", 1e-10},
      {"closure", 1e-10},      {"table_equivalence", 1e-10}, {"riemann_rh", 1e-10},
  };
  return tol;
}

double tolerance_scale() {
  const char* env = std::getenv("RHKIT_TOLERANCE_SCALE");
  if (env == nullptr || *env == '\0') return 1.0;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
    throw UsageError("RHKIT_TOLERANCE_SCALE must be a positive number");
  return v;
}

json read_json_arg(const std::string& arg, const std::string& what) {
  try {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw UsageError(what + ": cannot open \"" + arg + "\"");
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(what + ": invalid JSON (" + e.what() + ")");
  }
}

struct Config {
  std::optional<std::string> eos_path;
  std::map<std::string, double> tolerances = default_tolerances();
  std::string output_format;
  std::uint64_t seed = 20200416;

  double tol(const std::string& name) const { return tolerances.at(name) * tolerance_scale(); }

  static Config load(const std::string& path) {
    const json j = read_json_arg(path, "config");
    io::require_keys(j, "config", {"eos_path", "tolerances", "output_format", "seed"});
    Config c;
    if (j.contains("eos_path")) c.eos_path = j.at("eos_path").get<std::string>();
    if (j.contains("tolerances")) {
      const json& t = j.at("tolerances");
      if (!t.is_object()) throw UsageError("config: tolerances must be an object");
      for (const auto& [name, value] : t.items()) {
        if (!c.tolerances.count(name)) throw UsageError("config: unknown tolerance \"" + name + "\"");
        if (!value.is_number() || !(value.get<double>() > 0.0))
          throw UsageError("config: tolerance \"" + name + "\" must be a positive number");
        c.tolerances[name] = value.get<double>();
      }
    }
    if (j.contains("output_format")) {
      c.output_format = j.at("output_format").get<std::string>();
      if (c.output_format != "json" && c.output_format != "csv")
        throw UsageError("config: output_format must be json or csv");
    }
    if (j.contains("seed")) {
      if (!j.at("seed").is_number_unsigned()) throw UsageError("config: seed must be a non-negative integer");
      c.seed = j.at("seed").get<std::uint64_t>();
    }
    return c;
  }
};

// Options shared by every leaf command.
struct Common {
  std::string config_path;
  std::string eos_arg;
  std::string format;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file");
    cmd->add_option("--eos", eos_arg, "EOS JSON file or inline JSON");
    cmd->add_option("--format", format, "Output format (json or csv)")->check(CLI::IsMember({"json", "csv"}));
  }

  Config config() const { return config_path.empty() ? Config{} : Config::load(config_path); }

  Eos eos(const Config& cfg) const {
    if (!eos_arg.empty()) return io::eos_from_json(read_json_arg(eos_arg, "eos"));
    if (cfg.eos_path) return io::eos_from_json(read_json_arg(*cfg.eos_path, "eos"));
    return Eos::ideal_gas(1.4, 1.0, 1.0);
  }

  std::string output_format(const Config& cfg, const std::string& fallback) const {
    if (!format.empty()) return format;
    if (!cfg.output_format.empty()) return cfg.output_format;
    return fallback;
  }
};

Vec3 parse_vec3(const std::string& text) {
  std::stringstream ss(text);
  std::string item;
  std::vector<double> vals;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      vals.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("expected three comma-separated numbers, got \"" + text + "\"");
    }
  }
  if (vals.size() != 3) throw UsageError("expected three comma-separated numbers, got \"" + text + "\"");
  return Vec3(vals[0], vals[1], vals[2]);
}

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_number(row[i]);
    out << '\n';
  }
}

json table_json(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  json arr = json::array();
  for (const auto& row : rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
    arr.push_back(obj);
  }
  return arr;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

FluidState default_upstream(const Eos& eos) { return FluidState::from_pressure(eos, 1.0, Vec3::Zero(), 1.0); }

json residual_report(const ShockPair& pair, const Eos& eos) {
  json r;
  r["rh"] = io::to_json(rh_residuals(pair, eos));
  r["spacetime_term"] = io::to_json_array(spacetime_surface_term(pair, eos));
  r["spacetime_term_norm"] = spacetime_term_norm(pair, eos);
  r["reference_term"] = io::to_json_array(reference_surface_term(pair, eos));
  r["reference_term_norm"] = reference_term_norm(pair, eos);
  const ClosureResiduals c = closure_residuals(pair);
  r["closure"] = json{{"w_consistency", c.w_consistency}, {"jump_F", c.jump_F}, {"reference_density", c.reference_density}};
  const DetJumpResiduals d = det_jump_identity(pair);
  r["det_jump"] = json{{"rank_one_lemma", d.rank_one_lemma}, {"det_ratio", d.det_ratio}};
  return r;
}

// ---------------------------------------------------------------------------
// shock solve

struct ShockSolveCmd {
  Common common;
  std::string upstream;
  std::string normal = "1,0,0";
  double mach = 0.0, p2 = 0.0, rho2 = 0.0, dn = 0.0;
  CLI::Option *mach_opt = nullptr, *p2_opt = nullptr, *rho2_opt = nullptr, *dn_opt = nullptr;

  void attach(CLI::App* cmd) {
    common.attach(cmd);
    cmd->add_option("--upstream", upstream, "Upstream state JSON (default rho=1, v=0, p=1)");
    cmd->add_option("--normal", normal, "Shock normal, pointing downstream")->capture_default_str();
    mach_opt = cmd->add_option("--mach", mach, "Upstream Mach number relative to the shock");
    p2_opt = cmd->add_option("--p2", p2, "Downstream pressure");
    rho2_opt = cmd->add_option("--rho2", rho2, "Downstream density");
    dn_opt = cmd->add_option("--dn", dn, "Surface normal speed");
    mach_opt->excludes(p2_opt)->excludes(rho2_opt);
    p2_opt->excludes(rho2_opt);
  }

  int run(std::ostream& out) {
    const Config cfg = common.config();
    if (common.output_format(cfg, "json") != "json") throw UsageError("shock solve only produces json");
    const Eos eos = common.eos(cfg);
    const FluidState up = upstream.empty() ? default_upstream(eos) : io::state_from_json(read_json_arg(upstream, "upstream"), eos);
    const SurfaceFrame frame(parse_vec3(normal), dn_opt->count() ? dn : 0.0);

    ShockStrength strength = MachNumber{0.0};
    if (mach_opt->count())
      strength = MachNumber{mach};
    else if (p2_opt->count())
      strength = DownPressure{p2};
    else if (rho2_opt->count())
      strength = DownDensity{rho2};
    else if (dn_opt->count())
      strength = MachNumber{relative_velocity(frame, up.v) / sound_speed(eos, up.rho, up.s)};
    else
      throw UsageError("shock solve needs one of --mach, --p2, --rho2 or --dn");

    const ShockPair pair = solve_downstream(up, eos, frame, strength);
    if (dn_opt->count()) {
      const double scale = std::max(1.0, sound_speed(eos, up.rho, up.s));
      if (std::abs(pair.frame.D_n() - dn) > 1e-9 * scale)
        throw UsageError("--dn " + csv_number(dn) + " conflicts with the requested strength (implied D_n = " +
                         csv_number(pair.frame.D_n()) + ")");
    }

    const ThermoPoint t1 = pair.up.thermo(eos);
    const ThermoPoint t2 = pair.down.thermo(eos);
    json j;
    j["command"] = "shock solve";
    j["eos"] = io::to_json(eos);
    j["rho2"] = pair.down.rho;
    j["p2"] = t2.p;
    j["u2"] = pair.u_down();
    j["M1"] = pair.u_up() / std::sqrt(t1.c2);
    j["M2"] = pair.u_down() / std::sqrt(t2.c2);
    j["D_n"] = pair.frame.D_n();
    j["density_ratio"] = pair.down.rho / pair.up.rho;
    j["pressure_ratio"] = t2.p / t1.p;
    j["up"] = io::state_report(pair.up, eos);
    j["down"] = io::state_report(pair.down, eos);
    j["pair"] = io::to_json(pair);
    j["residuals"] = residual_report(pair, eos);
    j["lax"] = io::to_json(lax_admissible(pair, eos));
    const double tol = cfg.tol("rh");
    j["tolerance"] = tol;
    const bool pass = rh_residuals(pair, eos).norm() < tol && spacetime_term_norm(pair, eos) < cfg.tol("spacetime_term") &&
                      reference_term_norm(pair, eos) < cfg.tol("reference_term") &&
                      closure_residuals(pair).max() < cfg.tol("closure");
    j["pass"] = pass;
    emit(out, j);
    return pass ? 0 : 2;
  }
};

// ---------------------------------------------------------------------------
// shock hugoniot

std::vector<double> parse_range(const std::string& text) {
  std::stringstream ss(text);
  std::string a, b, n;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, n, ':') || ss.rdbuf()->in_avail())
    throw UsageError("range must look like start:stop:count");
  double lo = 0.0, hi = 0.0;
  long count = 0;
  try {
    lo = std::stod(a);
    hi = std::stod(b);
    count = std::stol(n);
  } catch (const std::exception&) {
    throw UsageError("range must look like start:stop:count");
  }
  if (count < 1) throw UsageError("range count must be positive");
  std::vector<double> out;
  for (long i = 0; i < count; ++i)
    out.push_back(count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
  return out;
}

struct ShockHugoniotCmd {
  Common common;
  std::string upstream;
  std::string normal = "1,0,0";
  std::string ratios = "1.01:5.99:200";

  void attach(CLI::App* cmd) {
    common.attach(cmd);
    cmd->add_option("--upstream", upstream, "Upstream state JSON (default rho=1, v=0, p=1)");
    cmd->add_option("--normal", normal, "Shock normal")->capture_default_str();
    cmd->add_option("--ratios", ratios, "Density ratios start:stop:count")->capture_default_str();
  }

  int run(std::ostream& out) {
    const Config cfg = common.config();
    const Eos eos = common.eos(cfg);
    const FluidState up = upstream.empty() ? default_upstream(eos) : io::state_from_json(read_json_arg(upstream, "upstream"), eos);
    const SurfaceFrame frame(parse_vec3(normal), 0.0);
    const auto samples = hugoniot_locus(up, eos, frame, parse_range(ratios));

    bool pass = true;
    const double tol = cfg.tol("rh");
    std::vector<std::vector<double>> rows;
    for (const HugoniotSample& s : samples) {
      const double u1 = relative_velocity(SurfaceFrame(frame.n(), s.D_n), up.v);
      FluidState down{s.rho2, up.v + (s.u2 - u1) * frame.n(), s.s2, up.omega};
      const ShockPair pair = make_shock_pair(up, down, SurfaceFrame(frame.n(), s.D_n));
      pass = pass && rh_residuals(pair, eos).norm() < tol;
      rows.push_back({s.rho2, s.p2, s.u2, s.s2, s.D_n});
    }
    const std::vector<std::string> header{"rho2", "p2", "u2", "s2", "Dn"};
    if (common.output_format(cfg, "csv") == "csv")
      write_csv(out, header, rows);
    else
      emit(out, json{{"command", "shock hugoniot"}, {"samples", table_json(header, rows)}, {"pass", pass}});
    return pass ? 0 : 2;
  }
};

// ---------------------------------------------------------------------------
// shock check

struct ShockCheckCmd {
  Common common;
  std::string pair_arg;

  void attach(CLI::App* cmd) {
    common.attach(cmd);
    cmd->add_option("--pair", pair_arg, "Shock pair JSON")->required();
  }

  int run(std::ostream& out) {
    const Config cfg = common.config();
    if (common.output_format(cfg, "json") != "json") throw UsageError("shock check only produces json");
    const Eos eos = common.eos(cfg);
    const ShockPair pair = io::pair_from_json(read_json_arg(pair_arg, "pair"), eos);
    json j;
    j["command"] = "shock check";
    j["pair"] = io::to_json(pair);
    j["residuals"] = residual_report(pair, eos);
    j["lax"] = io::to_json(lax_admissible(pair, eos));
    const double tol = cfg.tol("rh");
    j["tolerance"] = tol;
    const bool pass = rh_residuals(pair, eos).norm() < tol && spacetime_term_norm(pair, eos) < cfg.tol("spacetime_term");
    j["pass"] = pass;
    emit(out, j);
    return pass ? 0 : 2;
  }
};

// ---------------------------------------------------------------------------
// shock gap-demo

struct ShockGapCmd {
  Common common;
  std::string upstream;
  std::string normal = "1,0,0";
  double rho2 = 2.0, mach = 2.0, dn = 0.0;
  CLI::Option* dn_opt = nullptr;

  void attach(CLI::App* cmd) {
    common.attach(cmd);
    cmd->add_option("--upstream", upstream, "Upstream state JSON (default rho=1, v=0, p=1)");
    cmd->add_option("--normal", normal, "Shock normal")->capture_default_str();
    cmd->add_option("--rho2", rho2, "Downstream density")->capture_default_str();
    auto* m = cmd->add_option("--mach", mach, "Upstream Mach number fixing the surface speed")->capture_default_str();
    dn_opt = cmd->add_option("--dn", dn, "Surface normal speed (overrides --mach)");
    dn_opt->excludes(m);
  }

  int run(std::ostream& out) {
    const Config cfg = common.config();
    if (common.output_format(cfg, "json") != "json") throw UsageError("shock gap-demo only produces json");
    const Eos eos = common.eos(cfg);
    const FluidState up = upstream.empty() ? default_upstream(eos) : io::state_from_json(read_json_arg(upstream, "upstream"), eos);
    const Vec3 n = SurfaceFrame(parse_vec3(normal), 0.0).n();
    const double D_n = dn_opt->count() ? dn : n.dot(up.v) - mach * sound_speed(eos, up.rho, up.s);
    const ShockPair pair = construct_crh2_pair(up, eos, SurfaceFrame(n, D_n), rho2);
    const RhResiduals rh = rh_residuals(pair, eos);

    json j;
    j["command"] = "shock gap-demo";
    j["rho2"] = rho2;
    j["D_n"] = D_n;
    j["pair"] = io::to_json(pair);
    j["reference_term"] = io::to_json_array(reference_surface_term(pair, eos));
    j["reference_term_norm"] = reference_term_norm(pair, eos);
    j["spacetime_term"] = io::to_json_array(spacetime_surface_term(pair, eos));
    j["spacetime_term_norm"] = spacetime_term_norm(pair, eos);
    j["momentum_jump"] = rh.momentum_n;
    j["crh2_residuals"] = json{{"mass", rh.mass}, {"vel", io::to_json_array(rh.vel)}, {"energy", rh.energy}};
    const double tol = cfg.tol("reference_term");
    j["tolerance"] = tol;
    const double crh2 = std::sqrt(rh.mass * rh.mass + rh.vel.squaredNorm() + rh.energy * rh.energy);
    const bool pass = reference_term_norm(pair, eos) < tol && crh2 < cfg.tol("rh");
    j["pass"] = pass;
    emit(out, j);
    return pass ? 0 : 2;
  }
};

// ---------------------------------------------------------------------------
// tensor check

struct TensorCheckCmd {
  Common common;
  std::string field_name = "mass-conserving";
  std::string field_json;
  int points = 8;
  double step = kDefaultStep;
  double t = 0.1;
  CLI::Option* seed_opt = nullptr;
  std::uint64_t seed = 0;

  void attach(CLI::App* cmd) {
    common.attach(cmd);
    auto* named = cmd->add_option("--field", field_name, "Built-in field")
                      ->check(CLI::IsMember({"constant", "translation", "static-density", "simple-wave", "mass-conserving"}))
                      ->capture_default_str();
    cmd->add_option("--field-json", field_json, "Field specification JSON")->excludes(named);
    cmd->add_option("--points", points, "Number of sample points")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--step", step, "Finite-difference step")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--t", t, "Sample time")->capture_default_str();
    seed_opt = cmd->add_option("--seed", seed, "Seed for the sample points (overrides config)");
  }

  SmoothField build(const Eos& eos) const {
    if (!field_json.empty()) return ExprField::from_json(read_json_arg(field_json, "field")).smooth_field();
    if (field_name == "constant") return fields::constant(FluidState{1.0, Vec3(0.3, -0.2, 0.1), 0.1, 0.0});
    if (field_name == "translation") return fields::translation(eos, 1.0, Vec3(0.5, 0.2, 0.0), 0.1);
    if (field_name == "static-density") return fields::static_density();
    if (field_name == "simple-wave") return fields::simple_wave(eos);
    return fields::mass_conserving(fields::AcousticParams{});
  }

  int run(std::ostream& out) {
    const Config cfg = common.config();
    const Eos eos = common.eos(cfg);
    const SmoothField field = build(eos);
    std::mt19937_64 rng(seed_opt->count() ? seed : cfg.seed);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);

    const double tol = cfg.tol("table_equivalence");
    bool pass = true;
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < points; ++i) {
      const double x = coord(rng), y = coord(rng), z = coord(rng);
      const Vec3 pos(x, y, z);
      const MotionResiduals r = motion_residuals(field, eos, t, pos, step);
      const Covec4 d = div_T_residual(field, eos, t, pos, step);
      Covec4 expected;
      expected << r.energy, -r.momentum;
      const double gap = (d - expected).norm();
      pass = pass && gap < tol;
      rows.push_back({t, x, y, z, r.energy, r.momentum(0), r.momentum(1), r.momentum(2), r.thermo(0), r.thermo(1),
                      r.thermo(2), r.entropy, r.mass, d(0), d(1), d(2), d(3), gap});
    }
    const std::vector<std::string> header{"t", "x", "y", "z", "energy_res", "momentum_x", "momentum_y", "momentum_z",
                                          "thermo_x", "thermo_y", "thermo_z", "entropy_res", "mass_res",
                                          "divT_0", "divT_1", "divT_2", "divT_3", "table_gap"};
    if (common.output_format(cfg, "csv") == "csv")
      write_csv(out, header, rows);
    else
      emit(out, json{{"command", "tensor check"}, {"rows", table_json(header, rows)}, {"pass", pass}});
    return pass ? 0 : 2;
  }
};

// ---------------------------------------------------------------------------
// riemann solve

struct RiemannSolveCmd {
  Common common;
  std::string left, right;
  int samples = 400;
  double t = 0.2, xmin = -0.5, xmax = 0.5, x0 = 0.0;

  void attach(CLI::App* cmd) {
    common.attach(cmd);
    cmd->add_option("--left", left, "Left state JSON")->required();
    cmd->add_option("--right", right, "Right state JSON")->required();
    cmd->add_option("--samples", samples, "Number of cell-centred samples")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--t", t, "Output time")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--xmin", xmin, "Left edge")->capture_default_str();
    cmd->add_option("--xmax", xmax, "Right edge")->capture_default_str();
    cmd->add_option("--x0", x0, "Initial discontinuity position")->capture_default_str();
  }

  int run(std::ostream& out) {
    const Config cfg = common.config();
    const Eos eos = common.eos(cfg);
    if (!(xmax > xmin)) throw UsageError("--xmax must exceed --xmin");
    const FluidState l = io::state_from_json(read_json_arg(left, "left"), eos);
    const FluidState r = io::state_from_json(read_json_arg(right, "right"), eos);
    const RiemannSolution sol = solve_star(l, r, eos);

    bool pass = std::abs(sol.pressure_function_residual) < kRiemannTolerance;
    json shocks = json::array();
    for (const ShockPair& pair : shock_pairs(sol, eos)) {
      const double res = rh_residuals(pair, eos).norm();
      const LaxReport lax = lax_admissible(pair, eos);
      pass = pass && res < cfg.tol("riemann_rh") && lax.admissible && lax.entropy_jump > 0.0;
      shocks.push_back(json{{"speed", pair.frame.n().x() * pair.frame.D_n()}, {"rh_norm", res}, {"lax", io::to_json(lax)}});
    }

    std::vector<std::vector<double>> rows;
    const double dx = (xmax - xmin) / samples;
    for (int i = 0; i < samples; ++i) {
      const double x = xmin + (i + 0.5) * dx;
      const FluidState s = sample(sol, l, r, eos, (x - x0) / t);
      rows.push_back({x, s.rho, s.v.x(), pressure(eos, s.rho, s.s), s.s});
    }
    const std::vector<std::string> header{"x", "rho", "u", "p", "s"};
    if (common.output_format(cfg, "csv") == "csv") {
      write_csv(out, header, rows);
    } else {
      emit(out, json{{"command", "riemann solve"}, {"solution", io::to_json(sol)}, {"shocks", shocks},
                     {"samples", table_json(header, rows)}, {"pass", pass}});
    }
    return pass ? 0 : 2;
  }
};

// ---------------------------------------------------------------------------
// kinematics decompose

struct KinematicsDecomposeCmd {
  Common common;
  std::string matrix;

  void attach(CLI::App* cmd) {
    common.attach(cmd);
    cmd->add_option("--matrix", matrix, "4x4 map: 16 comma-separated row-major numbers, or JSON nested arrays")->required();
  }

  Mat4 parse() const {
    if (!matrix.empty() && (matrix.front() == '[' || matrix.find(',') == std::string::npos))
      return io::matrix<4>(read_json_arg(matrix, "matrix"));
    std::stringstream ss(matrix);
    std::string item;
    std::vector<double> vals;
    while (std::getline(ss, item, ',')) {
      try {
        vals.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw UsageError("matrix entries must be numbers");
      }
    }
    if (vals.size() != 16) throw UsageError("matrix needs 16 entries");
    Mat4 m;
    for (int i = 0; i < 16; ++i) m(i / 4, i % 4) = vals[i];
    return m;
  }

  int run(std::ostream& out) {
    const Config cfg = common.config();
    if (common.output_format(cfg, "json") != "json") throw UsageError("kinematics decompose only produces json");
    const Mat4 B4 = parse();
    const auto [tm, mv] = decompose_tangent_map(B4);
    json j;
    j["command"] = "kinematics decompose";
    j["mu"] = tm.mu;
    j["w"] = io::to_json_array(tm.w);
    j["r"] = io::to_json_array(tm.r);
    j["B3"] = io::to_json_array(tm.B3);
    j["v"] = io::to_json_array(mv.v);
    j["F"] = io::to_json_array(mv.F);
    j["det_F"] = mv.F.determinant();
    j["det_B"] = B4.determinant();
    j["roundtrip_error"] = (assemble_tangent_map(tm.mu, tm.w, mv.v, mv.F) - B4).cwiseAbs().maxCoeff();
    emit(out, j);
    return 0;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rhkit: shock jump conditions, energy-momentum tensors and exact Riemann solutions", "rhkit"};
  app.require_subcommand(1);

  auto* shock = app.add_subcommand("shock", "Shock-wave jump conditions");
  shock->require_subcommand(1);
  ShockSolveCmd solve;
  solve.attach(shock->add_subcommand("solve", "Solve the downstream state of a shock"));
  ShockHugoniotCmd hugoniot;
  hugoniot.attach(shock->add_subcommand("hugoniot", "Sample the Hugoniot locus (CSV)"));
  ShockCheckCmd check;
  check.attach(shock->add_subcommand("check", "Evaluate jump residuals of a given pair"));
  ShockGapCmd gap;
  gap.attach(shock->add_subcommand("gap-demo", "Pair satisfying the reference-space conditions only"));

  auto* tensor = app.add_subcommand("tensor", "Energy-momentum tensor residuals");
  tensor->require_subcommand(1);
  TensorCheckCmd tcheck;
  tcheck.attach(tensor->add_subcommand("check", "Residual table on a smooth field"));

  auto* riemann = app.add_subcommand("riemann", "Exact Riemann solver");
  riemann->require_subcommand(1);
  RiemannSolveCmd rsolve;
  rsolve.attach(riemann->add_subcommand("solve", "Sample the exact solution (CSV)"));

  auto* kin = app.add_subcommand("kinematics", "Space-time tangent maps");
  kin->require_subcommand(1);
  KinematicsDecomposeCmd decompose;
  decompose.attach(kin->add_subcommand("decompose", "Split a 4x4 tangent map into blocks"));

  if (args.empty()) {
    err << app.help();
    return 1;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (shock->got_subcommand("solve")) return solve.run(out);
    if (shock->got_subcommand("hugoniot")) return hugoniot.run(out);
    if (shock->got_subcommand("check")) return check.run(out);
    if (shock->got_subcommand("gap-demo")) return gap.run(out);
    if (tensor->got_subcommand("check")) return tcheck.run(out);
    if (riemann->got_subcommand("solve")) return rsolve.run(out);
    if (kin->got_subcommand("decompose")) return decompose.run(out);
  } catch (const PhysicsError& e) {
    emit(out, json{{"error", {{"module", std::string(e.module())}, {"name", std::string(e.name())}, {"message", e.what()}}}});
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << app.help();
  return 1;
}

}  // namespace rhkit::cli
