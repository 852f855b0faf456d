#pragma once

// Command line front end: parse a config (flags, flat key=value file, or
// JSON), dispatch to the solvers / auditor / spectrum / homoclinic modules,
// and emit deterministic JSON reports, CSV trajectories and SVG charts.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plap/io.hpp"
#include "plap/plap_version.hpp"

namespace plap::cli {

using ConfigMap = std::map<std::string, std::string>;

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t nxt = s.find(sep, pos);
    out.push_back(s.substr(pos, nxt == std::string::npos ? nxt : nxt - pos));
    if (nxt == std::string::npos) break;
    pos = nxt + 1;
  }
  return out;
}

inline std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "command",
      "problem.variant", "problem.p", "problem.b", "problem.M", "problem.g",
      "problem.c_lower", "problem.lambda", "problem.m", "problem.forcing", "problem.n",
      "potential.name", "potential.params",
      "solver.tol_residual", "solver.max_iter", "solver.path_points",
      "solver.deform_step", "solver.rho", "solver.seed", "solver.tol_decay",
      "solver.rim_samples", "solver.jobs",
      "output.dir", "output.formats",
      "spectrum.n_max", "spectrum.tol",
      "multiplicity.lambdas",
      "homoclinic.n_max", "homoclinic.points",
      "audit.profile", "audit.mu", "audit.M_thresh", "audit.x_star", "audit.radii",
      "audit.asymptotics", "audit.theta_points",
      "solve.method"};
  return keys;
}

inline void check_key(const std::string& key) {
  if (!known_keys().count(key))
    throw std::invalid_argument("config: unknown key '" + key + "'");
}

// Accepts either a JSON object (possibly a full report with a "config"
// member) or flat `key = value` lines with optional [section] headers.
inline ConfigMap load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  ConfigMap out;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j = json::parse(text);
    if (j.contains("config") && j["config"].is_object()) j = j["config"];
    for (auto it = j.begin(); it != j.end(); ++it) {
      check_key(it.key());
      out[it.key()] = it.value().is_string() ? it.value().get<std::string>()
                                             : it.value().dump();
    }
    return out;
  }
  std::string section;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key = value, got '" + line + "'");
    std::string key = trim(line.substr(0, eq));
    if (!section.empty()) key = section + "." + key;
    check_key(key);
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

struct Resolved {
  ConfigMap values;

  bool has(const std::string& k) const { return values.count(k) > 0; }
  std::string str(const std::string& k) const {
    auto it = values.find(k);
    if (it == values.end()) throw std::invalid_argument("config: missing key '" + k + "'");
    return it->second;
  }
  double num(const std::string& k) const { return std::stod(str(k)); }
  int integer(const std::string& k) const { return static_cast<int>(std::stoll(str(k))); }
  std::uint64_t u64(const std::string& k) const { return std::stoull(str(k)); }
  bool flag(const std::string& k) const {
    const std::string v = str(k);
    return v == "1" || v == "true" || v == "yes";
  }
};

inline std::function<double(double)> parse_g_spec(const std::string& spec, double period) {
  const auto parts = split(spec, ':');
  if (parts[0] == "const") {
    const double v = std::stod(parts.at(1));
    return [v](double) { return v; };
  }
  if (parts[0] == "cos") {
    const auto ab = split(parts.at(1), ',');
    const double a = std::stod(ab.at(0)), b = std::stod(ab.at(1));
    if (!(a > std::abs(b)))
      throw std::invalid_argument("g spec cos:a,b requires a > |b| for positivity");
    return [a, b, period](double t) {
      return a + b * std::cos(2.0 * std::numbers::pi * t / period);
    };
  }
  if (parts[0] == "csv") {
    const GridFn g = read_gridfn_csv(parts.at(1));
    return [g](double t) {
      // periodic nearest-node lookup
      const Mesh& m = g.mesh();
      double u = std::fmod(t - m.origin, m.period);
      if (u < 0) u += m.period;
      const int i = static_cast<int>(std::llround(u / m.h)) % m.points;
      return g.at(i, 0);
    };
  }
  throw std::invalid_argument("unknown g spec '" + spec + "'");
}

inline std::function<double(double)> parse_forcing_spec(const std::string& spec,
                                                        double period) {
  if (spec == "zero" || spec.empty()) return [](double) { return 0.0; };
  const auto parts = split(spec, ':');
  if (parts[0] == "const") {
    const double v = std::stod(parts.at(1));
    return [v](double) { return v; };
  }
  if (parts[0] == "sin" || parts[0] == "cos") {
    const auto am = split(parts.at(1), ',');
    const double amp = std::stod(am.at(0));
    const double mode = am.size() > 1 ? std::stod(am.at(1)) : 1.0;
    const bool is_sin = parts[0] == "sin";
    return [amp, mode, period, is_sin](double t) {
      const double a = 2.0 * std::numbers::pi * mode * t / period;
      return amp * (is_sin ? std::sin(a) : std::cos(a));
    };
  }
  if (parts[0] == "csv") {
    const GridFn g = read_gridfn_csv(parts.at(1));
    return [g](double t) {
      const Mesh& m = g.mesh();
      double u = std::fmod(t - m.origin, m.period);
      if (u < 0) u += m.period;
      const int i = static_cast<int>(std::llround(u / m.h)) % m.points;
      return g.at(i, 0);
    };
  }
  throw std::invalid_argument("unknown forcing spec '" + spec + "'");
}

inline PotentialModel parse_potential(const Resolved& cfg) {
  const std::string name = cfg.str("potential.name");
  std::map<std::string, double> params;
  const std::string ps = cfg.str("potential.params");
  if (!ps.empty()) {
    for (const auto& kv : split(ps, ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("potential params: expected key=value in '" + kv + "'");
      params[trim(kv.substr(0, eq))] = std::stod(kv.substr(eq + 1));
    }
  }
  if (name == "linear_forced" && !params.count("period"))
    params["period"] = cfg.num("problem.b");
  return builtin(name, params);
}

inline SolveOptions parse_opts(const Resolved& cfg) {
  SolveOptions o;
  o.tol_residual = cfg.num("solver.tol_residual");
  o.max_iter = cfg.integer("solver.max_iter");
  o.path_points = cfg.integer("solver.path_points");
  o.deform_step = cfg.num("solver.deform_step");
  o.rho = cfg.num("solver.rho");
  o.seed = cfg.u64("solver.seed");
  o.tol_decay = cfg.num("solver.tol_decay");
  o.rim_samples = cfg.integer("solver.rim_samples");
  return o;
}

inline json config_json(const Resolved& cfg) {
  json j = json::object();
  for (const auto& [k, v] : cfg.values) j[k] = v;
  return j;
}

struct Outputs {
  std::filesystem::path dir;
  bool want_json = true, want_csv = true, want_svg = false;
};

inline Outputs parse_outputs(const Resolved& cfg) {
  Outputs o;
  o.dir = cfg.str("output.dir");
  std::filesystem::create_directories(o.dir);
  o.want_json = o.want_csv = false;
  for (const auto& f : split(cfg.str("output.formats"), ',')) {
    if (f == "json") o.want_json = true;
    else if (f == "csv") o.want_csv = true;
    else if (f == "svg") o.want_svg = true;
    else throw std::invalid_argument("unknown output format '" + f + "'");
  }
  return o;
}

inline void emit_report(const Outputs& out, const Resolved& cfg, json result) {
  json report{{"command", cfg.str("command")},
              {"tool", std::string("plap ") + kVersion},
              {"config", config_json(cfg)},
              {"result", std::move(result)}};
  if (out.want_json) {
    std::ofstream f(out.dir / "report.json");
    f << report.dump(2) << "\n";
  }
  std::ofstream cfgf(out.dir / "resolved_config.json");
  cfgf << config_json(cfg).dump(2) << "\n";
}

}  // namespace detail

inline int run(std::vector<std::string> args) {
  CLI::App app{"plap: critical points of nonsmooth p-Laplacian periodic systems"};
  app.require_subcommand(1);

  struct Flag {
    CLI::Option* opt;
    std::string key;
    std::shared_ptr<std::string> value;
  };
  std::vector<Flag> flags;
  std::string config_path;

  auto add = [&](CLI::App* cmd, const std::string& flag, const std::string& key,
                 const std::string& desc) {
    auto store = std::make_shared<std::string>();
    Flag f{cmd->add_option(flag, *store, desc), key, store};
    flags.push_back(f);
  };

  // defaults shared by every command
  const ConfigMap defaults = {
      {"problem.variant", "base"}, {"problem.p", "2"}, {"problem.b", "6.283185307179586"},
      {"problem.M", "256"}, {"problem.g", "const:1"}, {"problem.c_lower", "1"},
      {"problem.lambda", "1"}, {"problem.m", "1"}, {"problem.forcing", "zero"},
      {"problem.n", "1"},
      {"potential.name", "quartic"}, {"potential.params", ""},
      {"solver.tol_residual", "1e-6"}, {"solver.max_iter", "20000"},
      {"solver.path_points", "64"}, {"solver.deform_step", "1e-2"}, {"solver.rho", "0.1"},
      {"solver.seed", "12345"}, {"solver.tol_decay", "1e-3"}, {"solver.rim_samples", "8"},
      {"solver.jobs", "1"},
      {"output.dir", "plap_out"}, {"output.formats", "json,csv"},
      {"spectrum.n_max", "3"}, {"spectrum.tol", "1e-10"},
      {"multiplicity.lambdas", "1,2,4,8,16,32,64,128,256"},
      {"homoclinic.n_max", "4"}, {"homoclinic.points", "256"},
      {"audit.profile", "Hj1"}, {"audit.mu", "0"}, {"audit.M_thresh", "-1"},
      {"audit.x_star", ""}, {"audit.radii", "0.01,0.1,1,10,100,1000"},
      {"audit.asymptotics", "0"}, {"audit.theta_points", "64"},
      {"solve.method", "minimize"}};

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "config file (flat key=value or JSON)");
    add(cmd, "--p", "problem.p", "exponent p in (1,inf)");
    add(cmd, "--b", "problem.b", "period length");
    add(cmd, "--M", "problem.M", "grid nodes per period");
    add(cmd, "--g", "problem.g", "coefficient spec: const:v | cos:a,b | csv:path");
    add(cmd, "--c-lower", "problem.c_lower", "claimed positive lower bound of g");
    add(cmd, "--potential", "potential.name", "potential name");
    add(cmd, "--params", "potential.params", "potential params key=val,key=val");
    add(cmd, "--tol", "solver.tol_residual", "weak residual tolerance");
    add(cmd, "--max-iter", "solver.max_iter", "iteration budget");
    add(cmd, "--path-points", "solver.path_points", "mountain pass path resolution");
    add(cmd, "--deform-step", "solver.deform_step", "deformation step");
    add(cmd, "--rho", "solver.rho", "rim radius");
    add(cmd, "--seed", "solver.seed", "random seed");
    add(cmd, "--jobs", "solver.jobs", "worker pool for sweeps (order-merged)");
    add(cmd, "--out", "output.dir", "output directory");
    add(cmd, "--formats", "output.formats", "comma list of json,csv,svg");
  };

  CLI::App* solve = app.add_subcommand("solve", "minimize or mountain-pass a variant");
  add_common(solve);
  add(solve, "--variant", "problem.variant", "base | eigen | scalar");
  add(solve, "--lambda", "problem.lambda", "eigen weight");
  add(solve, "--method", "solve.method", "minimize | mountain | saddle");

  CLI::App* multiplicity = app.add_subcommand("multiplicity", "lambda_* sweep");
  add_common(multiplicity);
  add(multiplicity, "--lambdas", "multiplicity.lambdas", "comma list of lambda values");

  CLI::App* homoc = app.add_subcommand("homoclinic", "window continuation run");
  add_common(homoc);
  add(homoc, "--n-max", "homoclinic.n_max", "largest window index");
  add(homoc, "--points", "homoclinic.points", "nodes on the first window");
  add(homoc, "--tol-decay", "solver.tol_decay", "endpoint decay target");

  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalue ladder vs shooting");
  add_common(spectrum);
  add(spectrum, "--n-max", "spectrum.n_max", "largest eigenvalue index");
  add(spectrum, "--shoot-tol", "spectrum.tol", "shooting tolerance");

  CLI::App* audit = app.add_subcommand("audit", "hypothesis audit");
  add_common(audit);
  add(audit, "--profile", "audit.profile", "Hg | Hg1 | Hj1..Hj5");
  add(audit, "--mu", "audit.mu", "superlinearity exponent");
  add(audit, "--M", "audit.M_thresh", "mu-condition radius threshold");
  add(audit, "--x-star", "audit.x_star", "comma vector with positive potential integral");
  add(audit, "--radii", "audit.radii", "sampling radii");
  add(audit, "--asymptotics", "audit.asymptotics", "1: include j+/j- estimates");
  add(audit, "--m", "problem.m", "resonance index (Hj5)");
  add(audit, "--forcing", "problem.forcing", "forcing spec (Hj5)");

  CLI::App* resonant = app.add_subcommand("resonant", "resonant saddle point search");
  add_common(resonant);
  add(resonant, "--m", "problem.m", "resonance index");
  add(resonant, "--forcing", "problem.forcing", "forcing spec: zero | const:v | sin:a[,k]");

  std::vector<const char*> argv;
  argv.push_back("plap");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    // resolve: defaults, then config file, then explicitly passed flags
    ConfigMap values = defaults;
    if (!config_path.empty())
      for (const auto& [k, v] : detail::load_config_file(config_path)) values[k] = v;
    for (const auto& f : flags)
      if (f.opt->count() > 0) values[f.key] = *f.value;
    if (const char* env_seed = std::getenv("PLAP_SEED")) values["solver.seed"] = env_seed;

    CLI::App* active = app.get_subcommands().front();
    values["command"] = active->get_name();
    detail::Resolved cfg{values};

    const auto t_start = std::chrono::steady_clock::now();
    const detail::Outputs out = detail::parse_outputs(cfg);
    const SolveOptions opts = detail::parse_opts(cfg);
    const double b = cfg.num("problem.b");
    int exit_code = 0;

    if (active == spectrum) {
      const SpectrumResult table =
          verify_table(cfg.num("problem.p"), b, cfg.integer("spectrum.n_max"),
                       cfg.num("spectrum.tol"));
      if (out.want_csv) write_spectrum_csv((out.dir / "solution.csv").string(), table);
      if (out.want_svg) {
        std::vector<double> xs, f1, f2;
        for (const auto& r : table.rows) {
          xs.push_back(r.n);
          f1.push_back(r.lambda_formula);
          f2.push_back(r.lambda_shooting);
        }
        write_svg_chart((out.dir / "run.svg").string(), xs, {f1, f2});
      }
      detail::emit_report(out, cfg, to_json(table));
    } else if (active == audit) {
      const PotentialModel model = detail::parse_potential(cfg);
      AuditParams ap;
      ap.p = cfg.num("problem.p");
      ap.b = b;
      ap.mu = cfg.num("audit.mu");
      ap.M_thresh = cfg.num("audit.M_thresh");
      ap.seed = opts.seed;
      ap.m = cfg.integer("problem.m");
      ap.theta_points = cfg.integer("audit.theta_points");
      if (!cfg.str("audit.x_star").empty()) {
        for (const auto& v : detail::split(cfg.str("audit.x_star"), ','))
          ap.x_star.push_back(std::stod(v));
      }
      ap.radii.clear();
      for (const auto& v : detail::split(cfg.str("audit.radii"), ','))
        ap.radii.push_back(std::stod(v));
      const std::string profile = cfg.str("audit.profile");
      if (profile == "Hg" || profile == "Hg1")
        ap.g = detail::parse_g_spec(cfg.str("problem.g"), b);
      if (profile == "Hj5") {
        const Mesh mesh = make_mesh(b, cfg.integer("problem.M"));
        ap.forcing = GridFn::sample(mesh, detail::parse_forcing_spec(
                                              cfg.str("problem.forcing"), b));
      }
      const PotentialModel* mp = &model;
      AuditReport rep = audit_hypotheses(*mp, profile, ap);
      json result = to_json(rep);
      if (cfg.flag("audit.asymptotics")) {
        std::vector<double> radii = {1e4, 1e6, 1e8};
        result["asymptotics"] = to_json(estimate_asymptotics(model, radii));
      }
      detail::emit_report(out, cfg, result);
      if (!rep.all_passed()) exit_code = 0;  // a failed hypothesis is a finding, not an error
    } else if (active == homoc) {
      const PotentialModel model = detail::parse_potential(cfg);
      auto g = detail::parse_g_spec(cfg.str("problem.g"), 2.0 * b);
      try {
        const HomoclinicRun run =
            continuation(model, g, cfg.num("problem.c_lower"), cfg.num("problem.p"), b,
                         cfg.integer("homoclinic.n_max"), cfg.integer("homoclinic.points"),
                         opts);
        if (out.want_csv) write_gridfn_csv((out.dir / "solution.csv").string(), run.candidate);
        if (out.want_svg) {
          std::vector<double> xs, cn;
          for (const auto& e : run.entries) {
            xs.push_back(e.n);
            cn.push_back(e.c_n);
          }
          write_svg_chart((out.dir / "run.svg").string(), xs, {cn});
        }
        const GuardResult guard =
            nontriviality_guard(model, run, cfg.num("problem.p"), cfg.num("problem.c_lower"));
        json result = to_json(run, "solution.csv");
        result["guard"] = json{{"ok", guard.ok},
                               {"ess_sup_h", guard.ess_sup_h},
                               {"c_lower", guard.c_lower},
                               {"hypotheses_ok", guard.hypotheses_ok},
                               {"note", guard.note}};
        detail::emit_report(out, cfg, result);
      } catch (const NonconvergenceError& e) {
        json result{{"error", e.what()}};
        detail::emit_report(out, cfg, result);
        exit_code = 2;
      }
    } else if (active == multiplicity) {
      const PotentialModel model = detail::parse_potential(cfg);
      auto g = detail::parse_g_spec(cfg.str("problem.g"), b);
      const Mesh mesh = make_mesh(b, cfg.integer("problem.M"));
      const ProblemSpec spec =
          ProblemSpec::eigen(cfg.num("problem.p"), g, cfg.num("problem.c_lower"), 1.0);
      std::vector<double> lambdas;
      for (const auto& v : detail::split(cfg.str("multiplicity.lambdas"), ','))
        if (!v.empty()) lambdas.push_back(std::stod(v));
      const int jobs = std::max(1, cfg.integer("solver.jobs"));
      SweepResult sweep;
      if (jobs == 1 || lambdas.size() < 2) {
        sweep = lambda_star_sweep(spec, model, lambdas, mesh, opts);
      } else {
        std::sort(lambdas.begin(), lambdas.end());
        std::vector<std::future<SweepResult>> futs;
        for (double lam : lambdas)
          futs.push_back(std::async(std::launch::async, [&, lam] {
            return lambda_star_sweep(spec, model, {lam}, mesh, opts);
          }));
        for (auto& f : futs) {
          SweepResult one = f.get();
          for (auto& row : one.rows) {
            if (!sweep.lambda_star_empirical && row.has_min && row.has_pass &&
                row.phi1 < 0.0 && row.phi2 > 0.0 && row.dist_inf >= 1e-3)
              sweep.lambda_star_empirical = row.lambda;
            sweep.rows.push_back(std::move(row));
          }
        }
      }
      detail::emit_report(out, cfg, to_json(sweep));
    } else {  // solve / resonant
      const PotentialModel model = detail::parse_potential(cfg);
      const Mesh mesh = make_mesh(b, cfg.integer("problem.M"));
      const std::string variant =
          active == resonant ? "resonant" : cfg.str("problem.variant");
      ProblemSpec spec;
      if (variant == "base")
        spec = ProblemSpec::base(cfg.num("problem.p"),
                                 detail::parse_g_spec(cfg.str("problem.g"), b),
                                 cfg.num("problem.c_lower"));
      else if (variant == "eigen")
        spec = ProblemSpec::eigen(cfg.num("problem.p"),
                                  detail::parse_g_spec(cfg.str("problem.g"), b),
                                  cfg.num("problem.c_lower"), cfg.num("problem.lambda"));
      else if (variant == "scalar")
        spec = ProblemSpec::scalar(cfg.num("problem.p"));
      else if (variant == "resonant")
        spec = ProblemSpec::resonant(cfg.integer("problem.m"),
                                     detail::parse_forcing_spec(cfg.str("problem.forcing"), b));
      else
        throw std::invalid_argument("unknown variant '" + variant + "'");

      const std::string method = active == resonant ? "saddle" : cfg.str("solve.method");
      try {
        CriticalPoint cp = [&] {
          if (method == "minimize") {
            Rng rng(opts.seed);
            return minimize(spec, model, rng.noise(mesh, model.dim, 1e-2), opts);
          }
          if (method == "mountain") {
            std::vector<double> dir = model.x_star;
            if (dir.empty()) dir.assign(static_cast<std::size_t>(model.dim), 1.0);
            const FarEndpoint fe =
                find_far_endpoint(spec, model, GridFn::constant(mesh, dir), opts);
            return mountain_pass(spec, model, fe.e, opts);
          }
          if (method == "saddle") {
            const Split split = spec.variant == Variant::Resonant
                                    ? Split::fourier_up_to(spec.m)
                                    : Split::mean_zero();
            return saddle_search(spec, model, mesh, split, opts);
          }
          throw std::invalid_argument("unknown method '" + method + "'");
        }();
        if (out.want_csv) write_gridfn_csv((out.dir / "solution.csv").string(), cp.x);
        if (out.want_svg) {
          std::vector<double> xs, ys;
          for (int i = 0; i < cp.x.points(); ++i) {
            xs.push_back(cp.x.mesh().node(i));
            ys.push_back(cp.x.at(i, 0));
          }
          write_svg_chart((out.dir / "run.svg").string(), xs, {ys});
        }
        json result = to_json(cp);
        if (spec.variant == Variant::Resonant) {
          std::vector<double> thetas(64);
          for (int i = 0; i < 64; ++i) thetas[i] = 2.0 * std::numbers::pi * i / 64;
          const GridFn h = GridFn::sample(
              mesh, detail::parse_forcing_spec(cfg.str("problem.forcing"), b));
          const LLResult ll = resonance_LL_check(model, h, spec.m, b, thetas);
          result["landesman_lazer"] =
              json{{"ok", ll.ok}, {"margin", ll.margin}, {"worst_theta", ll.worst_theta}};
        }
        detail::emit_report(out, cfg, result);
      } catch (const NonconvergenceError& e) {
        if (out.want_csv)
          write_gridfn_csv((out.dir / "solution.csv").string(), e.best().x);
        json result{{"error", e.what()}, {"best", to_json(e.best())}};
        detail::emit_report(out, cfg, result);
        exit_code = 2;
      }
    }

    const auto t_end = std::chrono::steady_clock::now();
    std::ofstream log(out.dir / "run.log");
    log << "command " << cfg.str("command") << "\nwall_time_s "
        << std::chrono::duration<double>(t_end - t_start).count() << "\n";
    return exit_code;
  } catch (const NonconvergenceError& e) {
    std::cerr << "plap: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "plap: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace plap::cli
