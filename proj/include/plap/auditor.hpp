#pragma once

// Numerical hypothesis auditing: growth bounds, the mu-superlinearity
// condition via generalized directional derivatives, origin limits,
// positivity integrals, asymptotic slopes j+/j- with the G-function
// comparison, the Landesman-Lazer margin over a phase grid, and the
// spectral gap constant of the resonant splitting.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "plap/grid.hpp"
#include "plap/potential.hpp"
#include "plap/rng.hpp"

namespace plap {

enum class Verdict { pass, fail, inconclusive };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct CheckResult {
  std::string label;
  Verdict verdict = Verdict::inconclusive;
  double margin = 0.0;  // worst slack; negative means violated
  double lhs = 0.0, rhs = 0.0;
  double witness_t = 0.0;
  std::vector<double> witness_x;
  std::string detail;
};

struct AuditReport {
  std::string profile;
  std::vector<CheckResult> checks;
  std::vector<double> radii;
  int samples = 0;
  std::uint64_t seed = 0;
  std::string note;

  bool all_passed() const {
    for (const auto& c : checks)
      if (c.verdict == Verdict::fail) return false;
    return true;
  }
  const CheckResult* find(const std::string& label) const {
    for (const auto& c : checks)
      if (c.label == label) return &c;
    return nullptr;
  }
};

struct AuditParams {
  double p = 2.0;
  double mu = 0.0;           // 0: take the model's metadata
  double M_thresh = -1.0;    // <0: take the model's metadata
  std::vector<double> x_star;  // empty: take the model's metadata
  std::vector<double> radii = {1e-2, 1e-1, 1.0, 10.0, 100.0, 1e3};
  std::vector<double> origin_radii = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  std::vector<double> far_radii = {1e2, 1e3, 1e4};
  int samples = 160;
  std::uint64_t seed = 2024;
  double b = 1.0;                      // integration period for the integrals
  std::function<double(double)> g;     // coefficient, for the Hg profiles
  GridFn forcing;                      // Hj5: h(t)
  int m = 1;                           // Hj5: resonance index
  int theta_points = 64;               // Hj5: phase grid resolution
};

namespace detail {

inline constexpr double kStrictTol = 1e-6;

inline CheckResult strict_check(std::string label, double margin) {
  CheckResult c;
  c.label = std::move(label);
  c.margin = margin;
  if (margin > kStrictTol)
    c.verdict = Verdict::pass;
  else if (margin < -kStrictTol)
    c.verdict = Verdict::fail;
  else
    c.verdict = Verdict::inconclusive;
  return c;
}

inline CheckResult slack_check(std::string label, double margin) {
  // non-strict inequality: equality counts as satisfied
  CheckResult c;
  c.label = std::move(label);
  c.margin = margin;
  c.verdict = margin >= -kStrictTol ? Verdict::pass : Verdict::fail;
  return c;
}

inline std::vector<double> random_direction(Rng& rng, int dim) {
  std::vector<double> d(static_cast<std::size_t>(dim));
  double n = 0.0;
  do {
    for (auto& v : d) v = rng.normal();
    n = 0.0;
    for (double v : d) n += v * v;
  } while (n == 0.0);
  n = std::sqrt(n);
  for (auto& v : d) v /= n;
  return d;
}

inline double integral_of_j(const PotentialModel& model, std::span<const double> x,
                            double t0, double t1, int nodes = 128) {
  const double h = (t1 - t0) / nodes;
  double s = 0.0;
  for (int i = 0; i < nodes; ++i) s += model.eval(t0 + (i + 0.5) * h, x);
  return s * h;
}

}  // namespace detail

// Per-radius estimates of the asymptotic slopes j(t,x)/x, sampled over a
// phase window wide enough to resolve bounded oscillations.
struct SlopePair {
  double j_plus = 0.0;
  double j_minus = 0.0;
};

inline SlopePair asymptotic_slopes_at(const PotentialModel& model, double t, double R,
                                      int window_samples = 257) {
  if (model.dim != 1)
    throw std::invalid_argument("asymptotic slopes: scalar models only");
  const double W = 8.0 * std::numbers::pi;
  double jp = std::numeric_limits<double>::infinity();
  double jm = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < window_samples; ++k) {
    const double off = W * k / (window_samples - 1);
    const double xp = R + off, xm = -R - off;
    jp = std::min(jp, model.eval(t, std::span<const double>(&xp, 1)) / xp);
    jm = std::max(jm, model.eval(t, std::span<const double>(&xm, 1)) / xm);
  }
  return {jp, jm};
}

struct AsymptoticsEstimate {
  double j_plus = 0.0;
  double j_minus = 0.0;
  double G1_minus = 0.0;
  double G2_plus = 0.0;
  std::vector<double> radii;
  double trend_j_plus = 0.0;   // difference between the last two radius estimates
  double trend_j_minus = 0.0;
  bool prop8_consistent = false;  // G2+ <= j+ and j- <= G1- (with 0.01 slack)
};

// j+/j- and the Tang-comparison functions G1-, G2+ at growing radii.
inline AsymptoticsEstimate estimate_asymptotics(const PotentialModel& model,
                                                std::vector<double> radii,
                                                int samples = 257) {
  if (model.dim != 1)
    throw std::invalid_argument("estimate_asymptotics: scalar models only");
  if (radii.empty()) throw std::domain_error("estimate_asymptotics: radii required");
  std::sort(radii.begin(), radii.end());
  if (!(radii.back() >= 1e4))
    throw std::domain_error("estimate_asymptotics: max radius must be >= 1e4");

  const std::vector<double> tsample =
      model.autonomous ? std::vector<double>{0.0}
                       : std::vector<double>{0.0, 0.7, 1.3, 2.1, 3.3, 4.7, 5.9};

  auto g_bounds = [&](double t, double x) {
    if (model.set_descriptor) {
      const SubgradSet s = model.set_descriptor(t, std::span<const double>(&x, 1));
      return std::pair<double, double>{s.min_scalar(), s.max_scalar()};
    }
    const double xl = x * (1.0 - 1e-9), xr = x * (1.0 + 1e-9);
    const double ul = model.subgrad(t, std::span<const double>(&xl, 1))[0];
    const double ur = model.subgrad(t, std::span<const double>(&xr, 1))[0];
    return std::pair<double, double>{std::min(ul, ur), std::max(ul, ur)};
  };

  const double W = 8.0 * std::numbers::pi;
  auto at_radius = [&](double R) {
    AsymptoticsEstimate e;
    e.j_plus = std::numeric_limits<double>::infinity();
    e.j_minus = -std::numeric_limits<double>::infinity();
    e.G2_plus = std::numeric_limits<double>::infinity();
    e.G1_minus = -std::numeric_limits<double>::infinity();
    for (double t : tsample) {
      const SlopePair sp = asymptotic_slopes_at(model, t, R, samples);
      e.j_plus = std::min(e.j_plus, sp.j_plus);
      e.j_minus = std::max(e.j_minus, sp.j_minus);
      for (int k = 0; k < samples; ++k) {
        const double off = W * k / (samples - 1);
        const double xp = R + off, xm = -R - off;
        const auto [g1p, g2p] = g_bounds(t, xp);
        const auto [g1m, g2m] = g_bounds(t, xm);
        const double jp = model.eval(t, std::span<const double>(&xp, 1));
        const double jm = model.eval(t, std::span<const double>(&xm, 1));
        e.G2_plus = std::min(e.G2_plus, 2.0 * jp / xp - g2p);
        e.G1_minus = std::max(e.G1_minus, 2.0 * jm / xm - g1m);
      }
    }
    return e;
  };

  AsymptoticsEstimate out = at_radius(radii.back());
  out.radii = radii;
  if (radii.size() > 1) {
    const AsymptoticsEstimate prev = at_radius(radii[radii.size() - 2]);
    out.trend_j_plus = out.j_plus - prev.j_plus;
    out.trend_j_minus = out.j_minus - prev.j_minus;
  }
  out.prop8_consistent =
      out.G2_plus <= out.j_plus + 0.01 && out.j_minus <= out.G1_minus + 0.01;
  return out;
}

struct LLResult {
  bool ok = false;
  double worst_theta = 0.0;
  double margin = 0.0;  // min over theta of (right side - left side)
};

// Landesman-Lazer margin: for every phase theta the forcing integral must
// stay strictly below the asymptotic-slope integral.
inline LLResult resonance_LL_check(const PotentialModel& model, const GridFn& h, int m,
                                   double b, const std::vector<double>& theta_grid) {
  if (model.dim != 1)
    throw std::invalid_argument("resonance_LL_check: scalar models only");
  if (theta_grid.size() < 64)
    throw std::invalid_argument("resonance_LL_check: need at least 64 phase points");
  const double w = 2.0 * std::numbers::pi / b;

  // per-node slopes on a coarse profile grid (cheap for autonomous models)
  const int PT = model.autonomous ? 1 : 64;
  std::vector<double> jp(static_cast<std::size_t>(PT)), jm(static_cast<std::size_t>(PT));
  for (int i = 0; i < PT; ++i) {
    const SlopePair sp = asymptotic_slopes_at(model, b * i / PT, 1e6);
    jp[i] = sp.j_plus;
    jm[i] = sp.j_minus;
  }
  auto slope_at = [&](double t, bool plus) {
    if (PT == 1) return plus ? jp[0] : jm[0];
    double u = t / b * PT;
    const int i0 = static_cast<int>(std::floor(u)) % PT;
    const int i1 = (i0 + 1) % PT;
    const double th = u - std::floor(u);
    const double a = plus ? jp[i0] : jm[i0];
    const double c = plus ? jp[i1] : jm[i1];
    return (1.0 - th) * a + th * c;
  };

  const int QF = 1 << 16;  // fine quadrature; kinks of sin^± limit the mesh rule
  const double hf = b / QF;
  LLResult out;
  out.margin = std::numeric_limits<double>::infinity();
  for (double theta : theta_grid) {
    double right = 0.0;
    for (int i = 0; i < QF; ++i) {
      const double t = (i + 0.5) * hf;
      const double sn = std::sin(m * w * t + theta);
      right += (sn > 0.0 ? slope_at(t, true) * sn : -slope_at(t, false) * (-sn));
    }
    right *= hf;
    double left = 0.0;
    for (int i = 0; i < h.points(); ++i)
      left += h.at(i, 0) * std::sin(m * w * h.mesh().node(i) + theta);
    left *= h.mesh().h;
    const double margin = right - left;
    if (margin < out.margin) {
      out.margin = margin;
      out.worst_theta = theta;
    }
  }
  out.ok = out.margin >= 1e-9;
  return out;
}

// Exact per-mode spectral gap on the orthogonal complement of the resonant
// modes, in the W^{1,2} norm: min over k > m of (k^2-m^2) w^2 / (1 + k^2 w^2).
inline double gap_constant(int m, double b, int k_max) {
  if (k_max < m + 2) throw std::domain_error("gap_constant: k_max >= m+2");
  const double w = 2.0 * std::numbers::pi / b;
  double best = std::numeric_limits<double>::infinity();
  for (int k = m + 1; k <= k_max; ++k) {
    const double kk = static_cast<double>(k) * k * w * w;
    best = std::min(best, (kk - static_cast<double>(m) * m * w * w) / (1.0 + kk));
  }
  return best;
}

// Sampled Rayleigh quotients (|x'|_2^2 - lambda_m |x|_2^2) / |x|_{W^{1,2}}^2
// over random combinations of modes k in (m, k_max], with analytic mode
// derivatives so the quadrature is spectrally exact.
inline double rayleigh_gap_sample(const Mesh& mesh, int m, int k_max, int n_samples,
                                  std::uint64_t seed) {
  if (k_max >= mesh.points / 2)
    throw std::invalid_argument("rayleigh_gap_sample: modes alias on this mesh");
  Rng rng(seed);
  const double w = 2.0 * std::numbers::pi / mesh.period;
  const double lam = static_cast<double>(m) * m * w * w;
  double worst = std::numeric_limits<double>::infinity();
  for (int s = 0; s < n_samples; ++s) {
    GridFn x(mesh, 1), dx(mesh, 1);
    for (int k = m + 1; k <= k_max; ++k) {
      const double a = rng.normal(), bcoef = rng.normal();
      x.add_scaled(a, fourier_mode(mesh, k, true));
      x.add_scaled(bcoef, fourier_mode(mesh, k, false));
      dx.add_scaled(a, fourier_mode_deriv(mesh, k, true));
      dx.add_scaled(bcoef, fourier_mode_deriv(mesh, k, false));
    }
    const double x2 = l2h_inner(x, x), dx2 = l2h_inner(dx, dx);
    if (x2 + dx2 <= 0.0) continue;
    worst = std::min(worst, (dx2 - lam * x2) / (x2 + dx2));
  }
  return worst;
}

struct EquivalenceResult {
  double limit_v = 0.0;        // sup of p j / |x|^p at the smallest radii
  double limit_v_prime = 0.0;  // sup of (u,x) / |x|^p
  bool agree = false;
};

// The (v) <=> (v)' equivalence: both origin limits get the same sign verdict.
inline EquivalenceResult equivalence_check(const PotentialModel& model, double p,
                                           std::vector<double> radii = {1e-2, 1e-3, 1e-4,
                                                                        1e-5, 1e-6}) {
  std::sort(radii.begin(), radii.end());
  if (!(radii.front() <= 1e-6))
    throw std::domain_error("equivalence_check: radii must descend to <= 1e-6");
  Rng rng(777);
  EquivalenceResult out;
  out.limit_v = -std::numeric_limits<double>::infinity();
  out.limit_v_prime = -std::numeric_limits<double>::infinity();
  const double r0 = radii.front(), r1 = radii.size() > 1 ? radii[1] : radii.front();
  for (double r : {r0, r1}) {
    for (int k = 0; k < 32; ++k) {
      std::vector<double> d = detail::random_direction(rng, model.dim);
      std::vector<double> x = d;
      for (auto& v : x) v *= r;
      const double jv = model.eval(0.0, x);
      out.limit_v = std::max(out.limit_v, p * jv / std::pow(r, p));
      const std::vector<double> u = model.subgrad(0.0, x);
      out.limit_v_prime = std::max(out.limit_v_prime, row_dot(u, x) / std::pow(r, p));
    }
  }
  const bool v_ok = out.limit_v <= detail::kStrictTol;
  const bool vp_ok = out.limit_v_prime <= detail::kStrictTol;
  out.agree = v_ok == vp_ok;
  return out;
}

// Hypothesis-family audit.  Verdicts come from deterministic sampling; every
// failure carries the worst witness point and the two sides of the violated
// inequality.
inline AuditReport audit_hypotheses(const PotentialModel& model, const std::string& profile,
                                    const AuditParams& params) {
  AuditReport rep;
  rep.profile = profile;
  rep.radii = params.radii;
  rep.samples = params.samples;
  rep.seed = params.seed;
  rep.note =
      "origin-limit convention: the (v)-type conditions are evaluated as |x| -> 0 limits";
  Rng rng(params.seed);

  const double mu = params.mu > 0.0 ? params.mu : model.growth.mu;
  const double Mth = params.M_thresh >= 0.0 ? params.M_thresh : model.growth.M_thresh;
  std::vector<double> x_star = params.x_star.empty() ? model.x_star : params.x_star;

  auto witness_fill = [](CheckResult& c, double t, std::span<const double> x, double lhs,
                         double rhs) {
    c.witness_t = t;
    c.witness_x.assign(x.begin(), x.end());
    c.lhs = lhs;
    c.rhs = rhs;
  };

  auto check_growth = [&](const std::string& label) {
    double worst = std::numeric_limits<double>::infinity();
    CheckResult c;
    for (double r : params.radii) {
      for (int k = 0; k < params.samples / 8 + 4; ++k) {
        std::vector<double> x = detail::random_direction(rng, model.dim);
        for (auto& v : x) v *= r;
        if (model.smooth_distance(x) < 1e-3 && model.kink_distance) continue;
        const double t = rng.uniform(0.0, params.b);
        const std::vector<double> u = model.subgrad(t, x);
        const double bound =
            model.growth.a1 + model.growth.c1 * std::pow(r, model.growth.r - 1.0);
        const double margin = bound - row_norm(u);
        if (margin < worst) {
          worst = margin;
          c = detail::slack_check(label, margin);
          witness_fill(c, t, x, row_norm(u), bound);
        }
      }
    }
    if (c.label.empty()) c = detail::slack_check(label, 0.0);
    c.detail = "|u| <= a1 + c1 |x|^{r-1}";
    return c;
  };

  auto check_mu = [&](const std::string& label) {
    CheckResult c;
    double worst = std::numeric_limits<double>::infinity();
    for (double r : params.radii) {
      if (r < std::max(Mth, 1e-12)) continue;
      for (int k = 0; k < params.samples / 8 + 4; ++k) {
        std::vector<double> x = detail::random_direction(rng, model.dim);
        for (auto& v : x) v *= r;
        const double t = rng.uniform(0.0, params.b);
        std::vector<double> neg = x;
        for (auto& v : neg) v = -v;
        const double j0 = model.j0_exact ? model.j0_exact(t, x, neg)
                                         : j0_estimate(model, t, x, neg);
        const double margin = -j0 - mu * model.eval(t, x);
        if (margin < worst) {
          worst = margin;
          c = detail::strict_check(label, margin);
          witness_fill(c, t, x, mu * model.eval(t, x), -j0);
        }
      }
    }
    if (c.label.empty()) {
      c = detail::strict_check(label, 0.0);
      c.verdict = Verdict::inconclusive;
    }
    c.detail = "mu j(t,x) <= -j0(t,x;-x) for |x| >= M";
    return c;
  };

  auto check_origin = [&](const std::string& label, bool strict) {
    // sampled sup of p j / |x|^p at the smallest radii
    double sup = -std::numeric_limits<double>::infinity();
    CheckResult c;
    c.label = label;
    const double r = params.origin_radii.empty() ? 1e-6
                                                 : *std::min_element(params.origin_radii.begin(),
                                                                     params.origin_radii.end());
    for (int k = 0; k < params.samples; ++k) {
      std::vector<double> x = detail::random_direction(rng, model.dim);
      for (auto& v : x) v *= r;
      const double t = rng.uniform(0.0, params.b);
      const double v = params.p * model.eval(t, x) / std::pow(r, params.p);
      if (v > sup) {
        sup = v;
        witness_fill(c, t, x, v, 0.0);
      }
    }
    c.margin = -sup;
    if (strict)
      c.verdict = sup < -detail::kStrictTol
                      ? Verdict::pass
                      : (sup > detail::kStrictTol ? Verdict::fail : Verdict::inconclusive);
    else
      c.verdict = sup <= detail::kStrictTol ? Verdict::pass : Verdict::fail;
    c.detail = strict ? "lim p j/|x|^p < 0 at the origin" : "lim p j/|x|^p <= 0 at the origin";
    return c;
  };

  auto check_positive_integral = [&](const std::string& label, double t0, double t1) {
    CheckResult c;
    if (x_star.empty()) {
      c.label = label;
      c.verdict = Verdict::inconclusive;
      c.detail = "no x_star supplied";
      return c;
    }
    const double v = detail::integral_of_j(model, x_star, t0, t1);
    c = detail::strict_check(label, v);
    witness_fill(c, t0, x_star, v, 0.0);
    c.detail = "integral of j(t, x*) must be positive";
    return c;
  };

  auto check_u_over_x = [&](const std::string& label) {
    CheckResult c;
    c.label = label;
    std::vector<double> maxes;
    for (double r : params.far_radii) {
      double worst = 0.0;
      double wt = 0.0, wx = 0.0;
      for (int k = 0; k < 16; ++k) {
        const double x = (k % 2 == 0 ? 1.0 : -1.0) * r * (1.0 + 0.03 * (k / 2));
        const double t = rng.uniform(0.0, params.b);
        const double u = model.subgrad(t, std::span<const double>(&x, 1))[0];
        if (std::abs(u / x) > worst) {
          worst = std::abs(u / x);
          wt = t;
          wx = x;
        }
      }
      maxes.push_back(worst);
      c.witness_t = wt;
      c.witness_x = {wx};
    }
    const double last = maxes.back();
    const bool decreasing = maxes.size() < 2 || last <= maxes.front() + 1e-12;
    c.lhs = last;
    c.rhs = 0.0;
    c.margin = 0.05 - last;
    c.verdict = (last <= 0.05 && decreasing)
                    ? Verdict::pass
                    : (last > 0.5 ? Verdict::fail : Verdict::inconclusive);
    c.detail = "u/x -> 0 as |x| -> infinity";
    return c;
  };

  if (profile == "Hg" || profile == "Hg1") {
    if (!params.g) throw std::invalid_argument("audit: Hg profiles need the coefficient g");
    CheckResult pos;
    pos.label = profile + ".positive";
    double gmin = std::numeric_limits<double>::infinity();
    double wt = 0.0;
    const double t0 = profile == "Hg1" ? -params.b : 0.0;
    const double t1 = profile == "Hg1" ? params.b : params.b;
    for (int i = 0; i <= 512; ++i) {
      const double t = t0 + (t1 - t0) * i / 512.0;
      if (params.g(t) < gmin) {
        gmin = params.g(t);
        wt = t;
      }
    }
    pos.margin = gmin;
    pos.lhs = gmin;
    pos.witness_t = wt;
    pos.verdict = gmin > detail::kStrictTol ? Verdict::pass : Verdict::fail;
    pos.detail = "g >= c > 0";
    rep.checks.push_back(pos);

    CheckResult per;
    per.label = profile + ".periodic";
    double worst = 0.0;
    const double shift = profile == "Hg1" ? 2.0 * params.b : params.b;
    for (int i = 0; i < 64; ++i) {
      const double t = t0 + (t1 - t0) * i / 64.0;
      worst = std::max(worst, std::abs(params.g(t) - params.g(t + shift)));
    }
    per.margin = 1e-10 - worst;
    per.lhs = worst;
    per.verdict = worst <= 1e-10 ? Verdict::pass : Verdict::fail;
    per.detail = profile == "Hg1" ? "g is 2b-periodic" : "g(0) = g(b)";
    rep.checks.push_back(per);
    return rep;
  }

  if (profile == "Hj1") {
    std::vector<double> zero(static_cast<std::size_t>(model.dim), 0.0);
    CheckResult z = detail::slack_check(
        "Hj1.zero_integral", detail::integral_of_j(model, zero, 0.0, params.b));
    z.detail = "integral of j(t,0) is nonnegative";
    rep.checks.push_back(z);
    rep.checks.push_back(check_growth("Hj1.iii_growth"));
    rep.checks.push_back(check_mu("Hj1.iv_mu"));
    rep.checks.push_back(check_origin("Hj1.v_origin", false));
    rep.checks.push_back(check_positive_integral("Hj1.vi_positive", 0.0, params.b));
  } else if (profile == "Hj2") {
    const std::vector<double> zero(static_cast<std::size_t>(model.dim), 0.0);
    const double zi = detail::integral_of_j(model, zero, 0.0, params.b);
    CheckResult z;
    z.label = "Hj2.iv_zero_integral";
    z.margin = -std::abs(zi);
    z.lhs = zi;
    z.verdict = std::abs(zi) <= 1e-9
                    ? Verdict::pass
                    : (std::abs(zi) > detail::kStrictTol ? Verdict::fail
                                                         : Verdict::inconclusive);
    z.detail = "integral of j(t,0) vanishes";
    rep.checks.push_back(z);
    rep.checks.push_back(check_growth("Hj2.iii_growth"));
    rep.checks.push_back(check_positive_integral("Hj2.iv_positive", 0.0, params.b));
    rep.checks.push_back(check_origin("Hj2.v_origin_strict", true));
    CheckResult sub = detail::slack_check("Hj2.iii_subcritical", params.p - model.growth.r);
    sub.detail = "growth exponent r < p";
    sub.verdict = model.growth.r < params.p ? Verdict::pass : Verdict::fail;
    rep.checks.push_back(sub);
  } else if (profile == "Hj3") {
    CheckResult z;
    z.label = "Hj3.zero";
    double worst = 0.0;
    const std::vector<double> zero(static_cast<std::size_t>(model.dim), 0.0);
    for (int i = 0; i < 32; ++i)
      worst = std::max(worst, std::abs(model.eval(rng.uniform(-params.b, params.b), zero)));
    z.margin = 1e-12 - worst;
    z.lhs = worst;
    z.verdict = worst <= 1e-12 ? Verdict::pass : Verdict::fail;
    z.detail = "j(t,0) = 0";
    rep.checks.push_back(z);

    CheckResult per;
    per.label = "Hj3.i_periodic";
    double worstp = 0.0;
    for (int i = 0; i < 32; ++i) {
      std::vector<double> x = detail::random_direction(rng, model.dim);
      const double t = rng.uniform(-params.b, params.b);
      worstp = std::max(worstp, std::abs(model.eval(t, x) - model.eval(t + 2.0 * params.b, x)));
    }
    per.margin = 1e-10 - worstp;
    per.lhs = worstp;
    per.verdict = worstp <= 1e-10 ? Verdict::pass : Verdict::fail;
    per.detail = "j(.,x) is 2b-periodic";
    rep.checks.push_back(per);

    rep.checks.push_back(check_growth("Hj3.iii_growth"));
    rep.checks.push_back(check_mu("Hj3.iv_mu"));
    rep.checks.push_back(check_origin("Hj3.v_origin", false));
    rep.checks.push_back(check_positive_integral("Hj3.vi_positive", -params.b, params.b));
  } else if (profile == "Hj4" || profile == "Hj5") {
    if (model.dim != 1)
      throw std::invalid_argument("audit: " + profile + " applies to scalar potentials");
    rep.checks.push_back(check_growth(profile + ".iii_growth"));
    rep.checks.push_back(check_u_over_x(profile + ".iv_u_over_x"));
    if (profile == "Hj4") {
      const AsymptoticsEstimate est =
          estimate_asymptotics(model, {1e4, 1e6}, 257);
      CheckResult ll;
      ll.label = "Hj4.v_LL_signs";
      const double ip = est.j_plus * params.b;   // integrals of the slopes
      const double im = est.j_minus * params.b;
      ll.lhs = est.j_plus;
      ll.rhs = est.j_minus;
      ll.margin = std::min(ip, -im);
      ll.verdict = (ip > detail::kStrictTol && im < -detail::kStrictTol)
                       ? Verdict::pass
                       : (ll.margin < -detail::kStrictTol ? Verdict::fail
                                                          : Verdict::inconclusive);
      ll.detail = "integral of j- < 0 < integral of j+";
      rep.checks.push_back(ll);
    } else {
      if (params.forcing.points() > 0) {
        std::vector<double> thetas(static_cast<std::size_t>(params.theta_points));
        for (int i = 0; i < params.theta_points; ++i)
          thetas[i] = 2.0 * std::numbers::pi * i / params.theta_points;
        const LLResult ll =
            resonance_LL_check(model, params.forcing, params.m, params.b, thetas);
        CheckResult c;
        c.label = "Hj5.v_LL_theta";
        c.margin = ll.margin;
        c.witness_t = ll.worst_theta;
        c.verdict = ll.ok ? Verdict::pass
                          : (ll.margin < -detail::kStrictTol ? Verdict::fail
                                                             : Verdict::inconclusive);
        c.detail = "strict Landesman-Lazer inequality over the phase grid";
        rep.checks.push_back(c);
      }
    }
  } else {
    throw std::invalid_argument("audit: unknown profile '" + profile + "'");
  }
  return rep;
}

}  // namespace plap
