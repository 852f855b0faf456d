#pragma once

// Serialization: GridFn CSV (header t,x1..xN), spectrum CSV, JSON summaries
// of solver results / audits / runs, and a minimal SVG line chart.

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "plap/auditor.hpp"
#include "plap/grid.hpp"
#include "plap/homoclinic.hpp"
#include "plap/solvers.hpp"
#include "plap/spectrum.hpp"

namespace plap {

using json = nlohmann::json;

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_gridfn_csv(const std::string& path, const GridFn& x) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "t";
  for (int c = 1; c <= x.comps(); ++c) out << ",x" << c;
  out << "\n";
  for (int i = 0; i < x.points(); ++i) {
    out << format_double(x.mesh().node(i));
    for (int c = 0; c < x.comps(); ++c) out << "," << format_double(x.at(i, c));
    out << "\n";
  }
}

inline GridFn read_gridfn_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty csv " + path);
  int comps = 0;
  for (char ch : line)
    if (ch == ',') comps++;
  std::vector<double> ts;
  std::vector<double> vals;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t pos = 0;
    std::vector<double> row;
    while (pos <= line.size()) {
      const std::size_t nxt = line.find(',', pos);
      row.push_back(std::stod(line.substr(pos, nxt - pos)));
      if (nxt == std::string::npos) break;
      pos = nxt + 1;
    }
    if (static_cast<int>(row.size()) != comps + 1)
      throw std::runtime_error("ragged csv row in " + path);
    ts.push_back(row[0]);
    for (int c = 0; c < comps; ++c) vals.push_back(row[1 + c]);
  }
  const int M = static_cast<int>(ts.size());
  if (M < 8) throw std::runtime_error("csv too short: " + path);
  const double h = ts[1] - ts[0];
  Mesh mesh = make_mesh(h * M, M, ts[0]);
  GridFn g(mesh, comps);
  for (int i = 0; i < M; ++i)
    for (int c = 0; c < comps; ++c) g.at(i, c) = vals[static_cast<std::size_t>(i) * comps + c];
  return g;
}

inline void write_spectrum_csv(const std::string& path, const SpectrumResult& r) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "n,lambda_formula,lambda_shooting,rel_err\n";
  for (const auto& row : r.rows)
    out << row.n << "," << format_double(row.lambda_formula) << ","
        << format_double(row.lambda_shooting) << "," << format_double(row.rel_err) << "\n";
}

inline json to_json(const StrongResidual& r) {
  return json{{"inclusion_dist", r.inclusion_dist},
              {"inclusion_dist_unreg", r.inclusion_dist_unreg},
              {"bc_primal", r.bc_primal},
              {"bc_deriv", r.bc_deriv}};
}

inline json to_json(const CriticalPoint& cp) {
  json j{{"kind", kind_name(cp.kind)},
         {"energy", cp.energy},
         {"residual_weak", cp.residual_weak},
         {"residual_strong", to_json(cp.residual_strong)},
         {"iterations", cp.iterations},
         {"sup_norm", linf_norm(cp.x)}};
  if (cp.rim) j["rim"] = json{{"rho", cp.rim->rho}, {"xi", cp.rim->xi}};
  if (cp.level) j["level"] = *cp.level;
  if (!cp.path_max_history.empty()) j["path_max_history"] = cp.path_max_history;
  if (!cp.warnings.empty()) j["warnings"] = cp.warnings;
  return j;
}

inline json to_json(const CheckResult& c) {
  json j{{"label", c.label},
         {"verdict", verdict_name(c.verdict)},
         {"margin", c.margin},
         {"detail", c.detail}};
  j["witness"] = json{{"t", c.witness_t}, {"x", c.witness_x}, {"lhs", c.lhs}, {"rhs", c.rhs}};
  return j;
}

inline json to_json(const AuditReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return json{{"profile", r.profile},
              {"checks", checks},
              {"sampling", json{{"radii", r.radii}, {"samples", r.samples}, {"seed", r.seed}}},
              {"note", r.note},
              {"all_passed", r.all_passed()}};
}

inline json to_json(const AsymptoticsEstimate& e) {
  return json{{"j_plus", e.j_plus},
              {"j_minus", e.j_minus},
              {"G1_minus", e.G1_minus},
              {"G2_plus", e.G2_plus},
              {"radii", e.radii},
              {"trend_j_plus", e.trend_j_plus},
              {"trend_j_minus", e.trend_j_minus},
              {"prop8_consistent", e.prop8_consistent}};
}

inline json to_json(const HomoclinicRun& run, const std::string& candidate_csv) {
  json entries = json::array();
  for (const auto& e : run.entries)
    entries.push_back(json{{"n", e.n},
                           {"c_n", e.c_n},
                           {"w_norm", e.w_norm},
                           {"sup_norm", e.sup_norm},
                           {"endpoint_primal", e.endpoint_primal},
                           {"endpoint_deriv", e.endpoint_deriv},
                           {"residual", e.residual}});
  return json{{"entries", entries},
              {"converged", run.converged},
              {"candidate_csv", candidate_csv},
              {"note", run.note}};
}

inline json to_json(const SweepResult& sw) {
  json rows = json::array();
  for (const auto& r : sw.rows) {
    json jr{{"lambda", r.lambda}, {"has_min", r.has_min}, {"has_pass", r.has_pass},
            {"phi1", r.phi1},     {"phi2", r.phi2},       {"residual1", r.residual1},
            {"residual2", r.residual2}, {"dist_inf", r.dist_inf}};
    if (!r.note.empty()) jr["note"] = r.note;
    rows.push_back(jr);
  }
  json out{{"rows", rows}};
  if (sw.lambda_star_empirical) out["lambda_star_empirical"] = *sw.lambda_star_empirical;
  return out;
}

inline json to_json(const SpectrumResult& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back(json{{"n", row.n},
                        {"lambda_formula", row.lambda_formula},
                        {"lambda_shooting", row.lambda_shooting},
                        {"rel_err", row.rel_err}});
  return json{{"p", r.p}, {"b", r.b}, {"rows", rows}};
}

// Minimal polyline chart; plotting is a convenience, never an acceptance
// surface.
inline void write_svg_chart(const std::string& path,
                            const std::vector<double>& xs,
                            const std::vector<std::vector<double>>& series) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  const int W = 640, H = 360, pad = 40;
  double ymin = 0.0, ymax = 1.0, xmin = 0.0, xmax = 1.0;
  bool first = true;
  for (const auto& s : series)
    for (double v : s) {
      if (first) {
        ymin = ymax = v;
        first = false;
      }
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  if (!xs.empty()) {
    xmin = xs.front();
    xmax = xs.back();
  }
  if (ymax - ymin < 1e-12) ymax = ymin + 1.0;
  if (xmax - xmin < 1e-12) xmax = xmin + 1.0;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  int ci = 0;
  for (const auto& s : series) {
    out << "<polyline fill=\"none\" stroke=\"" << colors[ci % 4] << "\" points=\"";
    for (std::size_t i = 0; i < s.size() && i < xs.size(); ++i) {
      const double px = pad + (xs[i] - xmin) / (xmax - xmin) * (W - 2 * pad);
      const double py = H - pad - (s[i] - ymin) / (ymax - ymin) * (H - 2 * pad);
      out << format_double(px) << "," << format_double(py) << " ";
    }
    out << "\"/>\n";
    ci++;
  }
  out << "<line x1=\"" << pad << "\" y1=\"" << H - pad << "\" x2=\"" << W - pad << "\" y2=\""
      << H - pad << "\" stroke=\"black\"/>\n</svg>\n";
}

}  // namespace plap
