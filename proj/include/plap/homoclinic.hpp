#pragma once

// Constructive homoclinic scheme: mountain pass on the growing periodic
// windows [-nb, nb], zero-extension warm starts, monitors for the level and
// uniform-bound sequences, and the nontriviality guard.

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "plap/energy.hpp"
#include "plap/grid.hpp"
#include "plap/solvers.hpp"

namespace plap {

struct HomoclinicEntry {
  int n = 0;
  double c_n = 0.0;            // mountain-pass level on the window
  double w_norm = 0.0;         // window W^{1,p} norm
  double sup_norm = 0.0;       // window sup norm
  double endpoint_primal = 0.0;  // max |x| on the outer 10% of the window
  double endpoint_deriv = 0.0;   // max |x'| there
  double residual = 0.0;
};

struct HomoclinicRun {
  std::vector<HomoclinicEntry> entries;
  GridFn candidate;  // solution on the largest window reached
  bool converged = false;
  std::string note;
};

inline Mesh window_mesh(double b, int n, int points_per_window) {
  return make_mesh(2.0 * n * b, n * points_per_window, -n * b);
}

// Compactly supported bump on [-b, b], used as the first-window path
// direction (it extends by zero across windows, like the reference path in
// the level-monotonicity argument).
inline GridFn window_bump(const Mesh& mesh, double b, int comps) {
  GridFn g(mesh, comps);
  for (int i = 0; i < mesh.points; ++i) {
    const double t = mesh.node(i);
    if (std::abs(t) < b) {
      const double c = std::cos(0.5 * std::numbers::pi * t / b);
      for (int cix = 0; cix < comps; ++cix) g.at(i, cix) = c * c;
    }
  }
  return g;
}

// Mountain-pass critical point of the window-n periodic problem.  A warm
// start, when given, is polished directly; the full path deformation runs
// otherwise (or when polishing fails).
inline CriticalPoint solve_window(const PotentialModel& model,
                                  const std::function<double(double)>& g, double c_lower,
                                  int n, double p, double b, int points_per_window,
                                  const SolveOptions& opts, const GridFn* warm = nullptr) {
  if (n < 1) throw std::domain_error("solve_window: n >= 1");
  const Mesh mesh = window_mesh(b, n, points_per_window);
  const ProblemSpec spec = ProblemSpec::window(p, g, c_lower, n);
  spec.validate(mesh, model.dim);

  if (warm != nullptr) {
    if (!warm->mesh().same_as(mesh) || warm->comps() != model.dim)
      throw std::invalid_argument("solve_window: warm start on the wrong mesh");
    GridFn x = *warm;
    const double rn = detail::polish(spec, model, x, opts.tol_residual);
    if (rn <= opts.tol_residual && linf_norm(x) >= 1e-3) {
      CriticalPoint cp = detail::make_point(spec, model, std::move(x),
                                            PointKind::mountain_pass, 0);
      cp.level = cp.energy;
      cp.rim = RimInfo{opts.rho, 0.0};
      return cp;
    }
  }

  const GridFn bump = window_bump(mesh, b, model.dim);
  const FarEndpoint fe = find_far_endpoint(spec, model, bump, opts);
  return mountain_pass(spec, model, fe.e, opts);
}

// Zero-extension of a window-n solution onto window n_next (values copied on
// the inner window, zero outside).  Energies agree exactly for potentials
// with j(t,0) = 0 whenever the inner function vanishes at its window ends.
inline GridFn extend_guess(const GridFn& x_n, double b, int n_next) {
  const Mesh& src = x_n.mesh();
  const int n = static_cast<int>(std::llround(src.period / (2.0 * b)));
  if (n_next <= n) throw std::invalid_argument("extend_guess: target window must be larger");
  const int per_window = src.points / n;
  const Mesh dst = window_mesh(b, n_next, per_window);
  if (std::abs(dst.h - src.h) > 1e-12 * src.h)
    throw std::invalid_argument("extend_guess: incompatible mesh spacing");
  GridFn out(dst, x_n.comps());
  const int offset = static_cast<int>(std::llround((src.origin - dst.origin) / src.h));
  for (int i = 0; i < src.points; ++i)
    for (int c = 0; c < x_n.comps(); ++c) out.at(offset + i, c) = x_n.at(i, c);
  return out;
}

namespace detail {

inline void outer_window_monitors(const GridFn& x, double& primal, double& deriv) {
  const Mesh& mesh = x.mesh();
  const double half = 0.5 * mesh.period;
  const double cut = 0.9 * half;  // outer 10% of [-L, L]
  const GridFn d = diff(x);
  primal = deriv = 0.0;
  for (int i = 0; i < mesh.points; ++i) {
    const double t = mesh.node(i) - (mesh.origin + half);  // centered coordinate
    if (std::abs(t) >= cut) {
      primal = std::max(primal, row_norm(x.row(i)));
      deriv = std::max(deriv, row_norm(d.row(i)));
    }
  }
}

}  // namespace detail

// Window continuation: solve n = 1..n_max with zero-extension warm starts,
// record the level/bound monitors, and declare convergence once the window
// tails decay and consecutive inner profiles agree.
inline HomoclinicRun continuation(const PotentialModel& model,
                                  const std::function<double(double)>& g, double c_lower,
                                  double p, double b, int n_max, int points_per_window,
                                  const SolveOptions& opts) {
  if (n_max < 2) throw std::domain_error("continuation: n_max >= 2");
  HomoclinicRun run;
  std::optional<GridFn> prev;
  for (int n = 1; n <= n_max; ++n) {
    std::optional<GridFn> warm;
    if (prev) warm = extend_guess(*prev, b, n);
    CriticalPoint cp = [&] {
      try {
        return solve_window(model, g, c_lower, n, p, b, points_per_window, opts,
                            warm ? &*warm : nullptr);
      } catch (const NonconvergenceError& e) {
        run.note = "window " + std::to_string(n) + " failed: " + e.what();
        throw;
      }
    }();

    HomoclinicEntry entry;
    entry.n = n;
    entry.c_n = cp.level.value_or(cp.energy);
    entry.w_norm = w1p_norm(cp.x, p);
    entry.sup_norm = linf_norm(cp.x);
    detail::outer_window_monitors(cp.x, entry.endpoint_primal, entry.endpoint_deriv);
    entry.residual = cp.residual_weak;
    run.entries.push_back(entry);

    bool profiles_agree = false;
    if (prev) {
      // compare on the inner half of the previous window
      const Mesh& pm = prev->mesh();
      const Mesh& cm = cp.x.mesh();
      const int off = static_cast<int>(std::llround((pm.origin - cm.origin) / cm.h));
      double dmax = 0.0;
      for (int i = 0; i < pm.points; ++i) {
        const double t = pm.node(i);
        if (std::abs(t) <= 0.5 * (n - 1) * b) {
          double s = 0.0;
          for (int c = 0; c < cp.x.comps(); ++c) {
            const double e = prev->at(i, c) - cp.x.at(off + i, c);
            s += e * e;
          }
          dmax = std::max(dmax, std::sqrt(s));
        }
      }
      profiles_agree = dmax <= 1e-3;
    }
    run.converged = profiles_agree && entry.endpoint_primal <= opts.tol_decay &&
                    entry.endpoint_deriv <= opts.tol_decay;
    prev = cp.x;
    run.candidate = cp.x;
  }
  return run;
}

struct GuardResult {
  bool ok = false;
  double ess_sup_h = 0.0;
  double c_lower = 0.0;
  bool hypotheses_ok = true;  // origin-limit check of the potential
  std::string note;
};

// Nontriviality guard from the proof's contradiction argument:
// h_n(t) = (u(t), x(t)) / |x(t)|^p must reach the coefficient level c
// somewhere, otherwise the scheme is collapsing to the trivial solution.
inline GuardResult nontriviality_guard(const PotentialModel& model, const HomoclinicRun& run,
                                       double p, double c_lower) {
  if (run.entries.empty()) throw std::invalid_argument("nontriviality_guard: empty run");
  GuardResult out;
  out.c_lower = c_lower;
  const GridFn& x = run.candidate;
  double hmax = 0.0;
  for (int i = 0; i < x.points(); ++i) {
    const double s = row_norm(x.row(i));
    if (s < 1e-12) continue;
    const std::vector<double> u = model.subgrad(x.mesh().node(i), x.row(i));
    hmax = std::max(hmax, row_dot(u, x.row(i)) / std::pow(s, p));
  }
  out.ess_sup_h = hmax;
  out.ok = hmax >= c_lower - 1e-6;

  // sampled origin limit p j(t,x)/|x|^p <= 0 (the hypothesis the guard rests on)
  double worst = -std::numeric_limits<double>::infinity();
  for (double r : {1e-2, 1e-3, 1e-4, 1e-5}) {
    for (int k = 0; k < 8; ++k) {
      std::vector<double> xx(static_cast<std::size_t>(model.dim), 0.0);
      xx[k % model.dim] = (k % 2 == 0 ? r : -r);
      worst = std::max(worst, p * model.eval(0.0, xx) / std::pow(r, p));
    }
  }
  if (worst > 1e-6) {
    out.hypotheses_ok = false;
    out.note = "hypotheses unverified: origin limit of p j/|x|^p is positive";
  }
  return out;
}

// Sup distance between the candidate (rotated so its peak sits at t = 0) and
// a reference profile; the window problems are autonomous so solutions are
// translation orbits.
inline double centered_sup_error(const GridFn& cand,
                                 const std::function<double(double)>& reference) {
  const Mesh& mesh = cand.mesh();
  int peak = 0;
  double best = -1.0;
  for (int i = 0; i < mesh.points; ++i) {
    const double v = row_norm(cand.row(i));
    if (v > best) {
      best = v;
      peak = i;
    }
  }
  const double half = 0.5 * mesh.period;
  double err = 0.0;
  for (int i = 0; i < mesh.points; ++i) {
    const int k = (i + peak) % mesh.points;
    double t = mesh.h * i;
    if (t > half) t -= mesh.period;  // centered coordinate relative to the peak
    err = std::max(err, std::abs(row_norm(cand.row(k)) - std::abs(reference(t))));
  }
  return err;
}

}  // namespace plap
