#pragma once

// Critical point computation: nonsmooth minimization with a preconditioned
// subgradient descent, a string-method mountain pass with local polishing,
// alternating extragradient saddle search on subspace splittings, and the
// lambda_* multiplicity sweep.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "plap/energy.hpp"
#include "plap/grid.hpp"
#include "plap/linsolve.hpp"
#include "plap/potential.hpp"
#include "plap/rng.hpp"

namespace plap {

struct SolveOptions {
  double tol_residual = 1e-6;
  int max_iter = 20000;
  int path_points = 64;     // mountain-pass path resolution
  double deform_step = 1e-2;  // nominal deformation step (backtracking halves it)
  double rho = 0.1;         // rim radius for the xi estimate
  std::uint64_t seed = 12345;
  double tol_decay = 1e-3;  // homoclinic endpoint decay target
  int rim_samples = 8;
  int rim_iters = 150;

  void validate() const {
    if (!(tol_residual > 0.0) || max_iter < 1 || path_points < 16 ||
        !(deform_step > 0.0) || !(rho > 0.0))
      throw std::domain_error("SolveOptions: all fields must be positive, path_points >= 16");
  }
};

enum class PointKind { minimizer, mountain_pass, saddle };

inline const char* kind_name(PointKind k) {
  switch (k) {
    case PointKind::minimizer: return "minimizer";
    case PointKind::mountain_pass: return "mountain_pass";
    case PointKind::saddle: return "saddle";
  }
  return "?";
}

struct RimInfo {
  double rho = 0.0;
  double xi = 0.0;
};

struct CriticalPoint {
  GridFn x;
  double energy = 0.0;
  double residual_weak = 0.0;
  StrongResidual residual_strong;
  PointKind kind = PointKind::minimizer;
  std::optional<RimInfo> rim;
  std::optional<double> level;
  int iterations = 0;
  std::vector<double> path_max_history;
  std::vector<std::string> warnings;
};

class NonconvergenceError : public std::runtime_error {
 public:
  NonconvergenceError(const std::string& what, CriticalPoint best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const CriticalPoint& best() const { return best_; }

 private:
  CriticalPoint best_;
};

namespace detail {

inline double precond_alpha(const ProblemSpec& spec) {
  if (spec.has_g_term()) return std::max(spec.c_lower, 1e-8);
  return 1.0;
}

// z = (-Delta_h + alpha I)^{-1} r, componentwise cyclic tridiagonal solve.
inline GridFn precond_solve(const GridFn& r, double alpha) {
  const Mesh& mesh = r.mesh();
  const int M = mesh.points, N = r.comps();
  const double ih2 = 1.0 / (mesh.h * mesh.h);
  std::vector<double> sub(static_cast<std::size_t>(M), -ih2);
  std::vector<double> diag(static_cast<std::size_t>(M), 2.0 * ih2 + alpha);
  std::vector<double> sup(static_cast<std::size_t>(M), -ih2);
  GridFn z(mesh, N);
  std::vector<double> rhs(static_cast<std::size_t>(M));
  for (int c = 0; c < N; ++c) {
    for (int i = 0; i < M; ++i) rhs[i] = r.at(i, c);
    if (!solve_cyclic_block_tridiag(M, 1, sub, diag, sup, rhs))
      throw std::runtime_error("preconditioner solve failed");
    for (int i = 0; i < M; ++i) z.at(i, c) = rhs[i];
  }
  return z;
}

struct JacBlocks {
  std::vector<double> sub, diag, sup;  // M blocks of N x N, row-major
};

// sigma'(v) = coef * (I + (p-2) v v^T / (|v|^2 + eps^2)).
inline void sigma_prime(std::span<const double> v, double p, double eps,
                        std::span<double> out) {
  const int N = static_cast<int>(v.size());
  const double v2 = row_dot(v, v);
  const double c = sigma_coef(v2, p, eps);
  const double denom = v2 + eps * eps;
  const double f = denom > 0.0 ? c * (p - 2.0) / denom : 0.0;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      out[static_cast<std::size_t>(a) * N + b] = f * v[a] * v[b] + (a == b ? c : 0.0);
}

// Jacobian of gradient_selection (FD on the subgradient where no analytic
// Jacobian exists), symmetrized.
inline JacBlocks assemble_jacobian(const ProblemSpec& spec, const PotentialModel& model,
                                   const GridFn& x) {
  const Mesh& mesh = x.mesh();
  const int M = mesh.points, N = x.comps();
  const std::size_t NN = static_cast<std::size_t>(N) * N;
  const double p = spec.p, eps = spec.eps_reg, h = mesh.h, ih2 = 1.0 / (h * h);
  const double scale = spec.j_scale();
  const GridFn d = diff(x);

  std::vector<double> S(static_cast<std::size_t>(M) * NN);
  for (int i = 0; i < M; ++i)
    sigma_prime(d.row(i), p, eps, std::span<double>(&S[NN * i], NN));

  JacBlocks J;
  J.sub.assign(static_cast<std::size_t>(M) * NN, 0.0);
  J.diag.assign(static_cast<std::size_t>(M) * NN, 0.0);
  J.sup.assign(static_cast<std::size_t>(M) * NN, 0.0);

  std::vector<double> U(NN), Sx(NN);
  const double lam =
      spec.variant == Variant::Resonant ? discrete_lambda_m(mesh, spec.m) : 0.0;
  for (int i = 0; i < M; ++i) {
    const int im = (i == 0) ? M - 1 : i - 1;
    const double* Si = &S[NN * i];
    const double* Sm = &S[NN * im];
    double* Dd = &J.diag[NN * i];
    double* Uu = &J.sup[NN * i];
    double* Ll = &J.sub[NN * i];
    for (std::size_t k = 0; k < NN; ++k) {
      Dd[k] = (Si[k] + Sm[k]) * ih2;
      Uu[k] = -Si[k] * ih2;
      Ll[k] = -Sm[k] * ih2;
    }
    const double t = mesh.node(i);
    if (spec.has_g_term()) {
      sigma_prime(x.row(i), p, eps, Sx);
      const double gi = spec.g(t);
      for (std::size_t k = 0; k < NN; ++k) Dd[k] += gi * Sx[k];
    } else if (spec.variant == Variant::Resonant) {
      for (int a = 0; a < N; ++a) Dd[static_cast<std::size_t>(a) * N + a] -= lam;
    }
    // potential contribution -scale * du/dx
    if (model.subgrad_jacobian) {
      model.subgrad_jacobian(t, x.row(i), U);
    } else {
      std::vector<double> xp(x.row(i).begin(), x.row(i).end());
      for (int b = 0; b < N; ++b) {
        const double step = 1e-6 * (1.0 + std::abs(xp[b]));
        const double keep = xp[b];
        xp[b] = keep + step;
        const std::vector<double> up = model.subgrad(t, xp);
        xp[b] = keep - step;
        const std::vector<double> um = model.subgrad(t, xp);
        xp[b] = keep;
        for (int a = 0; a < N; ++a)
          U[static_cast<std::size_t>(a) * N + b] = (up[a] - um[a]) / (2.0 * step);
      }
      // symmetrize (the exact Hessian block is symmetric)
      for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
          const double m01 = 0.5 * (U[static_cast<std::size_t>(a) * N + b] +
                                    U[static_cast<std::size_t>(b) * N + a]);
          U[static_cast<std::size_t>(a) * N + b] = m01;
          U[static_cast<std::size_t>(b) * N + a] = m01;
        }
    }
    for (std::size_t k = 0; k < NN; ++k) Dd[k] -= scale * U[k];
  }
  return J;
}

inline double weak_norm(const GridFn& r) { return l2h_norm(r); }

// Damped Newton on the nodewise-minimal gradient.  Returns the final weak
// residual; x is updated in place whenever the residual improves.
inline double newton_polish(const ProblemSpec& spec, const PotentialModel& model, GridFn& x,
                            double tol, int max_steps = 40) {
  GridFn r = min_selection_gradient(spec, model, x);
  double rn = weak_norm(r);
  for (int it = 0; it < max_steps && rn > tol; ++it) {
    const JacBlocks J = assemble_jacobian(spec, model, x);
    std::vector<double> rhs(r.flat().begin(), r.flat().end());
    if (!solve_cyclic_block_tridiag(x.points(), x.comps(), J.sub, J.diag, J.sup, rhs))
      break;
    GridFn delta(x.mesh(), x.comps());
    std::copy(rhs.begin(), rhs.end(), delta.flat().begin());
    if (!delta.all_finite()) break;
    double s = 1.0;
    bool accepted = false;
    for (int bt = 0; bt < 30; ++bt) {
      GridFn trial = x;
      trial.add_scaled(-s, delta);
      if (trial.all_finite()) {
        const GridFn rt = min_selection_gradient(spec, model, trial);
        const double rtn = weak_norm(rt);
        if (rtn < rn) {
          x = trial;
          r = rt;
          rn = rtn;
          accepted = true;
          break;
        }
      }
      s *= 0.5;
    }
    if (!accepted) break;
  }
  return rn;
}

// Barzilai-Borwein descent on Phi(x) = 0.5 |r(x)|_h^2, with J r evaluated by
// a central difference along r.  Handles the indefinite / rank-deficient
// Jacobians where plain Newton stalls (translation modes on large windows).
inline double bb_polish(const ProblemSpec& spec, const PotentialModel& model, GridFn& x,
                        double tol, int max_steps = 4000) {
  auto grad_phi = [&](const GridFn& xx, const GridFn& r, double rn) {
    GridFn g(xx.mesh(), xx.comps());
    if (rn == 0.0) return g;
    const double fd = 1e-7 * (1.0 + linf_norm(xx)) / std::max(rn, 1e-30);
    GridFn xp = xx, xm = xx;
    xp.add_scaled(fd, r);
    xm.add_scaled(-fd, r);
    const GridFn rp = min_selection_gradient(spec, model, xp);
    const GridFn rm = min_selection_gradient(spec, model, xm);
    g = rp;
    g -= rm;
    g *= xx.mesh().h / (2.0 * fd);  // h-weighted J r
    return g;
  };

  GridFn r = min_selection_gradient(spec, model, x);
  double rn = weak_norm(r);
  if (rn <= tol) return rn;
  double phi = 0.5 * rn * rn;
  GridFn g = grad_phi(x, r, rn);
  double step = 1e-4 / std::max(1e-12, l2h_norm(g));
  GridFn x_prev = x, g_prev = g;
  std::vector<double> recent{phi};

  double best_rn = rn;
  GridFn best_x = x;
  for (int it = 0; it < max_steps && rn > tol; ++it) {
    bool moved = false;
    double s = step;
    for (int bt = 0; bt < 25; ++bt) {
      GridFn trial = x;
      trial.add_scaled(-s, g);
      if (trial.all_finite()) {
        const GridFn rt = min_selection_gradient(spec, model, trial);
        const double rtn = weak_norm(rt);
        const double phit = 0.5 * rtn * rtn;
        const double ref = *std::max_element(recent.begin(), recent.end());
        if (phit <= ref - 1e-10 * s * l2h_inner(g, g) || phit < phi) {
          x_prev = x;
          g_prev = g;
          x = trial;
          r = rt;
          rn = rtn;
          phi = phit;
          moved = true;
          break;
        }
      }
      s *= 0.5;
    }
    if (!moved) break;
    if (rn < best_rn) {
      best_rn = rn;
      best_x = x;
    }
    recent.push_back(phi);
    if (recent.size() > 8) recent.erase(recent.begin());
    g = grad_phi(x, r, rn);
    GridFn dx = x, dg = g;
    dx -= x_prev;
    dg -= g_prev;
    const double sy = l2h_inner(dx, dg);
    const double yy = l2h_inner(dg, dg);
    const double ss = l2h_inner(dx, dx);
    if (it % 2 == 0)
      step = (sy > 0.0 && yy > 0.0) ? sy / yy : s * 2.0;
    else
      step = (sy > 0.0) ? ss / sy : s * 2.0;
    step = std::clamp(step, 1e-14, 1e6);
  }
  if (best_rn < rn) {
    x = best_x;
    rn = best_rn;
  }
  return rn;
}

// Snap nodes that hug a kink locus exactly onto it; accepted only when the
// set-aware residual then meets the tolerance.
inline double snap_polish(const ProblemSpec& spec, const PotentialModel& model, GridFn& x,
                          double tol, double current) {
  if (!model.kink_project || !model.kink_distance) return current;
  for (double window : {1e-9, 1e-6, 1e-3, 1e-2}) {
    GridFn trial = x;
    bool any = false;
    for (int i = 0; i < trial.points(); ++i) {
      if (model.kink_distance(trial.row(i)) < window) {
        const std::vector<double> pr = model.kink_project(trial.row(i));
        for (int c = 0; c < trial.comps(); ++c) trial.at(i, c) = pr[c];
        any = true;
      }
    }
    if (!any) continue;
    const double rn = residual_weak(spec, model, trial);
    if (rn <= tol && rn < current) {
      x = trial;
      return rn;
    }
  }
  return current;
}

inline double polish(const ProblemSpec& spec, const PotentialModel& model, GridFn& x,
                     double tol) {
  double rn = newton_polish(spec, model, x, tol);
  if (rn > tol) rn = bb_polish(spec, model, x, tol);
  if (rn > tol) rn = newton_polish(spec, model, x, tol);
  if (rn > tol) rn = snap_polish(spec, model, x, tol, rn);
  return rn;
}

inline CriticalPoint make_point(const ProblemSpec& spec, const PotentialModel& model,
                                GridFn x, PointKind kind, int iterations) {
  CriticalPoint cp{std::move(x)};
  cp.kind = kind;
  cp.iterations = iterations;
  cp.energy = energy(spec, model, cp.x);
  cp.residual_weak = residual_weak(spec, model, cp.x);
  cp.residual_strong = residual_strong(spec, model, cp.x);
  return cp;
}

}  // namespace detail

// Subgradient descent (preconditioned by the periodic -Delta + alpha metric)
// with backtracking line search, then local polishing to the tolerance.
inline CriticalPoint minimize(const ProblemSpec& spec, const PotentialModel& model,
                              const GridFn& x0, const SolveOptions& opts) {
  opts.validate();
  spec.validate(x0.mesh(), x0.comps());
  const double alpha = detail::precond_alpha(spec);
  GridFn x = x0;
  double E = energy(spec, model, x);
  const double E0 = E;
  double s = 1.0;
  int it = 0;
  double rn = std::numeric_limits<double>::infinity();
  GridFn best_x = x;
  double best_rn = rn;

  for (; it < opts.max_iter; ++it) {
    const GridFn r = min_selection_gradient(spec, model, x);
    rn = detail::weak_norm(r);
    if (rn < best_rn) {
      best_rn = rn;
      best_x = x;
    }
    if (rn <= opts.tol_residual) break;
    GridFn z = detail::precond_solve(r, alpha);
    double gd = l2h_inner(r, z);
    if (!(gd > 0.0)) {
      z = r;
      gd = l2h_inner(r, r);
      if (!(gd > 0.0)) break;
    }
    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt) {
      GridFn trial = x;
      trial.add_scaled(-s, z);
      if (trial.all_finite()) {
        const double Et = energy(spec, model, trial);
        if (Et <= E - 1e-4 * s * gd) {
          x = trial;
          E = Et;
          accepted = true;
          s = std::min(s * 2.0, 1e3);
          break;
        }
      }
      s *= 0.5;
      if (s < 1e-16) break;
    }
    if (!accepted) break;  // descent stalled; hand over to the polisher
  }

  double final_rn = rn;
  if (final_rn > opts.tol_residual) {
    GridFn xp = x;
    const double rp = detail::polish(spec, model, xp, opts.tol_residual);
    const double Ep = energy(spec, model, xp);
    if (rp < final_rn && Ep <= E0 + 1e-9 * std::max(1.0, std::abs(E0))) {
      x = xp;
      final_rn = rp;
    }
  }
  if (final_rn > opts.tol_residual) {
    CriticalPoint best = detail::make_point(spec, model, best_rn < final_rn ? best_x : x,
                                            PointKind::minimizer, it);
    throw NonconvergenceError("minimize: residual " + std::to_string(best.residual_weak) +
                                  " above tolerance after " + std::to_string(it) +
                                  " iterations",
                              std::move(best));
  }
  CriticalPoint cp = detail::make_point(spec, model, std::move(x), PointKind::minimizer, it);
  return cp;
}

// Estimate of xi = inf{ energy : |x|_{W^{1,p}} = rho } by projected descent
// from seeded random starts.  The returned value is an upper bound.
inline double rim_estimate(const ProblemSpec& spec, const PotentialModel& model,
                           const Mesh& mesh, double rho, int samples,
                           const SolveOptions& opts) {
  if (!(rho > 0.0)) throw std::domain_error("rim_estimate: rho > 0");
  Rng rng(opts.seed ^ 0x5bd1e995u);
  const double alpha = detail::precond_alpha(spec);
  double best = std::numeric_limits<double>::infinity();
  auto project = [&](GridFn f) {
    const double nw = w1p_norm(f, spec.p);
    if (nw > 0.0) f *= rho / nw;
    return f;
  };
  for (int k = 0; k < std::max(1, samples); ++k) {
    GridFn x = project(rng.noise(mesh, model.dim, 1.0));
    double E = energy(spec, model, x);
    double s = 0.25;
    for (int itr = 0; itr < opts.rim_iters; ++itr) {
      const GridFn r = min_selection_gradient(spec, model, x);
      const GridFn z = detail::precond_solve(r, alpha);
      GridFn trial = x;
      trial.add_scaled(-s, z);
      trial = project(std::move(trial));
      const double Et = energy(spec, model, trial);
      if (Et < E) {
        x = std::move(trial);
        E = Et;
        s = std::min(s * 1.5, 10.0);
      } else {
        s *= 0.5;
        if (s < 1e-12) break;
      }
    }
    best = std::min(best, E);
  }
  return best;
}

struct FarEndpoint {
  double lambda_scale = 1.0;
  GridFn e;
};

// Scale a direction until the energy is decisively negative past the rim.
inline FarEndpoint find_far_endpoint(const ProblemSpec& spec, const PotentialModel& model,
                                     const GridFn& direction, const SolveOptions& opts) {
  if (linf_norm(direction) == 0.0)
    throw std::invalid_argument("find_far_endpoint: direction must be nonzero");
  double lam = 1.0;
  for (int k = 0; k < 60; ++k) {
    GridFn e = direction;
    e *= lam;
    if (energy(spec, model, e) < -1.0 && w1p_norm(e, spec.p) > opts.rho)
      return {lam, std::move(e)};
    lam *= 2.0;
  }
  throw std::runtime_error(
      "no descent direction: energy never became negative along the ray "
      "(superlinearity of the potential not observed)");
}

namespace detail {

inline void requidistribute(std::vector<GridFn>& path) {
  const int P = static_cast<int>(path.size());
  std::vector<double> cum(static_cast<std::size_t>(P), 0.0);
  for (int j = 1; j < P; ++j) {
    GridFn seg = path[j];
    seg -= path[j - 1];
    cum[j] = cum[j - 1] + l2h_norm(seg);
  }
  const double total = cum[P - 1];
  if (!(total > 0.0)) return;
  std::vector<GridFn> out = path;
  for (int j = 1; j + 1 < P; ++j) {
    const double target = total * j / (P - 1);
    int k = 0;
    while (k + 2 < P && cum[k + 1] < target) ++k;
    const double seg = cum[k + 1] - cum[k];
    const double th = seg > 0.0 ? (target - cum[k]) / seg : 0.0;
    GridFn v = path[k];
    GridFn dgf = path[k + 1];
    dgf -= path[k];
    v.add_scaled(th, dgf);
    out[j] = std::move(v);
  }
  path = std::move(out);
}

}  // namespace detail

// Numerical mountain pass: deform a discretized path from 0 to the endpoint
// by moving interior nodes along the negative minimal subgradient
// (re-equidistributing each sweep, path max nonincreasing under
// backtracking), then polish the maximal node to a critical point.
inline CriticalPoint mountain_pass(const ProblemSpec& spec, const PotentialModel& model,
                                   const GridFn& endpoint, const SolveOptions& opts) {
  opts.validate();
  spec.validate(endpoint.mesh(), endpoint.comps());
  const Mesh& mesh = endpoint.mesh();
  const int N = endpoint.comps();

  GridFn zero(mesh, N);
  const double E_origin = energy(spec, model, zero);
  if (E_origin > 1e-12)
    throw std::invalid_argument("mountain_pass: energy at the origin must be <= 0");
  RimInfo rim{opts.rho, rim_estimate(spec, model, mesh, opts.rho, opts.rim_samples, opts)};
  const double E_end = energy(spec, model, endpoint);
  if (!(E_end < rim.xi))
    throw std::invalid_argument("mountain_pass: endpoint energy " + std::to_string(E_end) +
                                " not below the rim estimate " + std::to_string(rim.xi));
  if (!(w1p_norm(endpoint, spec.p) > opts.rho))
    throw std::invalid_argument("mountain_pass: endpoint inside the rim radius");

  const int P = opts.path_points;
  std::vector<GridFn> path;
  path.reserve(static_cast<std::size_t>(P));
  for (int j = 0; j < P; ++j) {
    GridFn y = endpoint;
    y *= static_cast<double>(j) / (P - 1);
    path.push_back(std::move(y));
  }

  std::vector<double> history;
  const int sweeps = std::max(60, opts.max_iter / std::max(1, P));
  double s = opts.deform_step;
  int stall = 0;
  auto path_energies = [&](const std::vector<GridFn>& pp) {
    std::vector<double> E(pp.size());
    for (std::size_t j = 0; j < pp.size(); ++j) E[j] = energy(spec, model, pp[j]);
    return E;
  };

  auto finish = [&](GridFn x, int iters) -> std::optional<CriticalPoint> {
    const double rn = detail::polish(spec, model, x, opts.tol_residual);
    if (rn > opts.tol_residual) return std::nullopt;
    if (linf_norm(x) < 1e-3) return std::nullopt;  // collapsed to the trivial point
    CriticalPoint cp = detail::make_point(spec, model, std::move(x),
                                          PointKind::mountain_pass, iters);
    cp.rim = rim;
    cp.level = cp.energy;
    cp.path_max_history = history;
    if (cp.energy < rim.xi - std::max(opts.tol_residual, 1e-9))
      cp.warnings.push_back("level fell below the rim estimate");
    return cp;
  };

  std::vector<double> E = path_energies(path);
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    const int kmax = static_cast<int>(std::max_element(E.begin(), E.end()) - E.begin());
    const double maxE = E[kmax];
    history.push_back(maxE);

    if (sweep > 4 && maxE < 0.1 * rim.xi)
      throw std::runtime_error("mountain_pass: geometry violated (path max collapsed)");

    const double res_max = residual_weak(spec, model, path[kmax]);
    const bool stalled = history.size() > 15 &&
                         std::abs(history[history.size() - 15] - maxE) <
                             1e-12 * std::max(1.0, std::abs(maxE));
    if (res_max <= 50.0 * opts.tol_residual || stalled || sweep + 1 == sweeps) {
      if (auto cp = finish(path[kmax], sweep)) return *cp;
      if (stalled) stall++;
      if (stall > 3) break;
    }

    std::vector<GridFn> grads;
    grads.reserve(static_cast<std::size_t>(P));
    for (int j = 0; j < P; ++j)
      grads.push_back(j == 0 || j == P - 1 ? GridFn(mesh, N)
                                           : min_selection_gradient(spec, model, path[j]));
    bool accepted = false;
    for (int bt = 0; bt < 30 && !accepted; ++bt) {
      std::vector<GridFn> trial = path;
      for (int j = 1; j + 1 < P; ++j) trial[j].add_scaled(-s, grads[j]);
      detail::requidistribute(trial);
      std::vector<double> Et = path_energies(trial);
      const double newMax = *std::max_element(Et.begin(), Et.end());
      if (newMax <= maxE + 1e-12) {
        path = std::move(trial);
        E = std::move(Et);
        accepted = true;
        s = std::min(s * 1.3, 10.0 * opts.deform_step);
      } else {
        s *= 0.5;
      }
    }
    if (!accepted) {
      if (auto cp = finish(path[kmax], sweep)) return *cp;
      break;
    }
  }

  const int kmax = static_cast<int>(std::max_element(E.begin(), E.end()) - E.begin());
  if (auto cp = finish(path[kmax], sweeps)) return *cp;
  CriticalPoint best = detail::make_point(spec, model, path[kmax],
                                          PointKind::mountain_pass, sweeps);
  best.rim = rim;
  best.level = best.energy;
  best.path_max_history = history;
  throw NonconvergenceError("mountain_pass: residual " +
                                std::to_string(best.residual_weak) +
                                " above tolerance after path deformation",
                            std::move(best));
}

enum class SplitKind { MeanZero, FourierUpTo };

struct Split {
  SplitKind kind = SplitKind::MeanZero;
  int m = 0;  // highest retained mode for FourierUpTo

  static Split mean_zero() { return {SplitKind::MeanZero, 0}; }
  static Split fourier_up_to(int m) { return {SplitKind::FourierUpTo, m}; }
};

namespace detail {

inline GridFn project_low(const Split& split, const GridFn& x) {
  if (split.kind == SplitKind::MeanZero) {
    auto [mean, v] = mean_zero_project(x);
    GridFn lo = x;
    lo -= v;
    return lo;
  }
  std::vector<int> modes;
  for (int k = 0; k <= split.m; ++k) modes.push_back(k);
  return fourier_project(x, modes);
}

// Exact-ish maximization of the energy over the low block through x + w,
// w in the block.  The block is low dimensional: coordinates are scanned
// then refined by ternary search.
inline void maximize_low_block(const ProblemSpec& spec, const PotentialModel& model,
                               const Split& split, GridFn& x) {
  std::vector<GridFn> basis;
  const Mesh& mesh = x.mesh();
  if (split.kind == SplitKind::MeanZero) {
    for (int c = 0; c < x.comps(); ++c) {
      GridFn e(mesh, x.comps());
      for (int i = 0; i < mesh.points; ++i) e.at(i, c) = 1.0;
      basis.push_back(std::move(e));
    }
  } else {
    basis.push_back(fourier_mode(mesh, 0, true));
    for (int k = 1; k <= split.m; ++k) {
      basis.push_back(fourier_mode(mesh, k, true));
      basis.push_back(fourier_mode(mesh, k, false));
    }
  }
  for (const GridFn& e : basis) {
    const double C = 4.0 + 2.0 * linf_norm(x);
    double best_c = 0.0, best_E = energy(spec, model, x);
    for (int k = 0; k <= 64; ++k) {
      const double c = -C + 2.0 * C * k / 64.0;
      GridFn trial = x;
      trial.add_scaled(c, e);
      const double Et = energy(spec, model, trial);
      if (Et > best_E) {
        best_E = Et;
        best_c = c;
      }
    }
    double lo = best_c - 2.0 * C / 64.0, hi = best_c + 2.0 * C / 64.0;
    for (int k = 0; k < 70; ++k) {
      const double c1 = lo + (hi - lo) / 3.0, c2 = hi - (hi - lo) / 3.0;
      GridFn t1 = x, t2 = x;
      t1.add_scaled(c1, e);
      t2.add_scaled(c2, e);
      if (energy(spec, model, t1) < energy(spec, model, t2))
        lo = c1;
      else
        hi = c2;
    }
    x.add_scaled(0.5 * (lo + hi), e);
  }
}

}  // namespace detail

// Saddle search by alternating extragradient steps: ascent on the low block
// (constants, or Fourier modes <= m), preconditioned descent on the
// complement, diminishing steps eta_0/sqrt(k), then local polishing.
inline CriticalPoint saddle_search(const ProblemSpec& spec, const PotentialModel& model,
                                   const Mesh& mesh, const Split& split,
                                   const SolveOptions& opts) {
  opts.validate();
  if (split.kind == SplitKind::MeanZero && spec.variant != Variant::Scalar)
    throw std::invalid_argument("saddle_search: MeanZero split expects the scalar variant");
  if (split.kind == SplitKind::FourierUpTo &&
      (spec.variant != Variant::Resonant || spec.p != 2.0))
    throw std::invalid_argument("saddle_search: FourierUpTo split needs resonant, p = 2");
  if (split.kind == SplitKind::FourierUpTo && mesh.points % 2 != 0)
    throw std::invalid_argument("saddle_search: Fourier split needs an even node count");
  spec.validate(mesh, model.dim);

  std::vector<std::string> warnings;
  {
    // coercivity signatures along representative block directions
    GridFn lo_dir = split.kind == SplitKind::MeanZero
                        ? GridFn::constant(mesh, std::vector<double>(model.dim, 1.0))
                        : fourier_mode(mesh, split.m, false) + fourier_mode(mesh, 0, true);
    GridFn hi_dir = split.kind == SplitKind::MeanZero
                        ? fourier_mode(mesh, 1, false)
                        : fourier_mode(mesh, split.m + 1, false);
    auto Eat = [&](const GridFn& d, double s) {
      GridFn y = d;
      y *= s;
      return energy(spec, model, y);
    };
    if (!(Eat(lo_dir, 256.0) < Eat(lo_dir, 2.0)))
      warnings.push_back("anticoercivity signature not observed on the ascent block");
    if (!(Eat(hi_dir, 256.0) > Eat(hi_dir, 2.0)))
      warnings.push_back("coercivity signature not observed on the descent block");
  }

  Rng rng(opts.seed ^ 0xa02bdbf7bb3c0a7ULL);
  GridFn x = rng.noise(mesh, model.dim, 0.1);
  const double alpha = detail::precond_alpha(spec);
  const double eta0 = 0.25;
  double rn = std::numeric_limits<double>::infinity();
  int it = 0;
  GridFn best_x = x;
  double best_rn = rn;

  for (; it < opts.max_iter; ++it) {
    const GridFn r = min_selection_gradient(spec, model, x);
    rn = detail::weak_norm(r);
    if (rn < best_rn) {
      best_rn = rn;
      best_x = x;
    }
    if (rn <= opts.tol_residual) break;
    if (linf_norm(detail::project_low(split, x)) > 1e6)
      throw std::runtime_error(
          "anticoercivity not detected: ascent block diverged during saddle search");

    const double eta = eta0 / std::sqrt(static_cast<double>(it + 1));
    GridFn rl = detail::project_low(split, r);
    x.add_scaled(+eta, rl);

    const GridFn r2 = min_selection_gradient(spec, model, x);
    GridFn rh = r2;
    rh -= detail::project_low(split, r2);
    GridFn z = detail::precond_solve(rh, alpha);
    GridFn zh = z;
    zh -= detail::project_low(split, z);
    x.add_scaled(-std::min(0.8, 6.0 * eta), zh);
    if (!x.all_finite())
      throw std::runtime_error("saddle_search: iteration produced non-finite values");

    if ((it + 1) % 25 == 0 || rn < 50.0 * opts.tol_residual) {
      detail::maximize_low_block(spec, model, split, x);
      GridFn xp = x;
      const double rp = detail::polish(spec, model, xp, opts.tol_residual);
      if (rp <= opts.tol_residual) {
        x = xp;
        rn = rp;
        break;
      }
      if (rp < rn) {
        x = xp;
        rn = rp;
      }
    }
  }

  if (rn > opts.tol_residual) {
    detail::maximize_low_block(spec, model, split, x);
    rn = detail::polish(spec, model, x, opts.tol_residual);
  }
  if (rn > opts.tol_residual) {
    CriticalPoint best =
        detail::make_point(spec, model, best_rn < rn ? best_x : x, PointKind::saddle, it);
    best.warnings = warnings;
    throw NonconvergenceError("saddle_search: residual " +
                                  std::to_string(best.residual_weak) + " above tolerance",
                              std::move(best));
  }
  CriticalPoint cp = detail::make_point(spec, model, std::move(x), PointKind::saddle, it);
  cp.warnings = warnings;
  return cp;
}

struct SweepRow {
  double lambda = 0.0;
  bool has_min = false, has_pass = false;
  double phi1 = 0.0, phi2 = 0.0;
  double residual1 = 0.0, residual2 = 0.0;
  double dist_inf = 0.0;
  std::string note;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::optional<double> lambda_star_empirical;  // least grid lambda with two solutions
};

namespace detail {

// Deterministic probe for a starting point with negative energy: scan
// doubling constant multiples of the model's positive direction, mirroring
// the proof's test function with positive potential integral.
inline std::optional<GridFn> negative_energy_probe(const ProblemSpec& spec,
                                                   const PotentialModel& model,
                                                   const Mesh& mesh) {
  std::vector<double> dir = model.x_star;
  if (dir.empty()) dir = std::vector<double>(static_cast<std::size_t>(model.dim), 0.0);
  if (row_norm(dir) == 0.0) dir[0] = 1.0;
  const double dn = row_norm(dir);
  for (auto& v : dir) v /= dn;
  double bestE = 0.0;
  std::optional<GridFn> best;
  double R = 1.0;
  for (int k = 0; k < 40; ++k) {
    std::vector<double> val = dir;
    for (auto& v : val) v *= R;
    GridFn cand = GridFn::constant(mesh, val);
    const double E = energy(spec, model, cand);
    if (E < bestE) {
      bestE = E;
      best = std::move(cand);
    }
    R *= 2.0;
  }
  return best;
}

}  // namespace detail

// For each lambda: global-ish minimization (negative-energy probe + descent)
// and a mountain pass from the minimizer geometry.  Reports the least grid
// lambda with two nontrivial distinct solutions.
inline SweepResult lambda_star_sweep(const ProblemSpec& spec_base, const PotentialModel& model,
                                     std::vector<double> lambdas, const Mesh& mesh,
                                     const SolveOptions& opts) {
  if (spec_base.variant != Variant::Eigen)
    throw std::invalid_argument("lambda_star_sweep: expects the eigenvalue variant");
  std::sort(lambdas.begin(), lambdas.end());
  SweepResult out;
  for (double lam : lambdas) {
    ProblemSpec spec = spec_base;
    spec.lambda = lam;
    SweepRow row;
    row.lambda = lam;
    Rng rng(opts.seed ^ 0x6a09e667f3bcc909ULL);
    GridFn x0 = rng.noise(mesh, model.dim, 1e-2);
    if (auto probe = detail::negative_energy_probe(spec, model, mesh)) x0 = *probe;
    try {
      const CriticalPoint x1 = minimize(spec, model, x0, opts);
      row.has_min = true;
      row.phi1 = x1.energy;
      row.residual1 = x1.residual_weak;
      const bool nontrivial1 = linf_norm(x1.x) >= 1e-3 && x1.energy < 0.0;
      if (nontrivial1) {
        try {
          const CriticalPoint x2 = mountain_pass(spec, model, x1.x, opts);
          row.has_pass = true;
          row.phi2 = x2.energy;
          row.residual2 = x2.residual_weak;
          GridFn dd = x1.x;
          dd -= x2.x;
          row.dist_inf = linf_norm(dd);
          if (!out.lambda_star_empirical && row.phi1 < 0.0 && row.phi2 > 0.0 &&
              row.dist_inf >= 1e-3)
            out.lambda_star_empirical = lam;
        } catch (const std::exception& e) {
          row.note = std::string("mountain pass: ") + e.what();
        }
      } else {
        row.note = "minimizer trivial or nonnegative energy";
      }
    } catch (const NonconvergenceError& e) {
      row.note = std::string("minimize: ") + e.what();
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace plap
