#pragma once

// The discrete energy functionals behind the five problem variants, their
// subgradient representatives, and the weak/strong residuals certifying a
// computed critical point.
//
// Discretization contract: rectangle-rule quadrature and periodic forward
// differences, so the assembled gradient is the exact gradient of the
// discrete (regularized) energy.

#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "plap/grid.hpp"
#include "plap/potential.hpp"

namespace plap {

enum class Variant { Base, Eigen, Window, Scalar, Resonant };

inline const char* variant_name(Variant v) {
  switch (v) {
    case Variant::Base: return "base";
    case Variant::Eigen: return "eigen";
    case Variant::Window: return "window";
    case Variant::Scalar: return "scalar";
    case Variant::Resonant: return "resonant";
  }
  return "?";
}

struct ProblemSpec {
  Variant variant = Variant::Base;
  double p = 2.0;
  std::function<double(double)> g;        // coefficient (Base/Eigen/Window)
  double c_lower = 1.0;                   // claimed lower bound g >= c > 0
  double lambda = 1.0;                    // Eigen weight
  int m = 0;                              // Resonant eigenvalue index
  std::function<double(double)> forcing;  // Resonant h(t); null means 0
  int n = 1;                              // Window index: domain [-nb, nb]
  double eps_reg = 1e-10;                 // p-Laplacian regularization

  static ProblemSpec base(double p, std::function<double(double)> g, double c_lower) {
    ProblemSpec s;
    s.variant = Variant::Base;
    s.p = p;
    s.g = std::move(g);
    s.c_lower = c_lower;
    return s;
  }
  static ProblemSpec eigen(double p, std::function<double(double)> g, double c_lower,
                           double lambda) {
    ProblemSpec s = base(p, std::move(g), c_lower);
    s.variant = Variant::Eigen;
    s.lambda = lambda;
    return s;
  }
  static ProblemSpec window(double p, std::function<double(double)> g, double c_lower,
                            int n) {
    ProblemSpec s = base(p, std::move(g), c_lower);
    s.variant = Variant::Window;
    s.n = n;
    return s;
  }
  static ProblemSpec scalar(double p) {
    ProblemSpec s;
    s.variant = Variant::Scalar;
    s.p = p;
    return s;
  }
  static ProblemSpec resonant(int m, std::function<double(double)> forcing = nullptr) {
    ProblemSpec s;
    s.variant = Variant::Resonant;
    s.p = 2.0;
    s.m = m;
    s.forcing = std::move(forcing);
    return s;
  }

  // Multiplier on the potential term (lambda for the eigenvalue variant).
  double j_scale() const { return variant == Variant::Eigen ? lambda : 1.0; }

  bool has_g_term() const {
    return variant == Variant::Base || variant == Variant::Eigen ||
           variant == Variant::Window;
  }

  void validate(const Mesh& mesh, int comps) const {
    if (!(p > 1.0)) throw std::domain_error("ProblemSpec: p must lie in (1,inf)");
    if (!(eps_reg > 0.0)) throw std::domain_error("ProblemSpec: eps_reg must be positive");
    if (has_g_term()) {
      if (!g) throw std::domain_error("ProblemSpec: coefficient g required");
      double gmin = std::numeric_limits<double>::infinity();
      for (int i = 0; i <= mesh.points; ++i) gmin = std::min(gmin, g(mesh.node(i)));
      if (!(gmin >= c_lower - 1e-12) || !(c_lower > 0.0))
        throw std::domain_error("ProblemSpec: g must satisfy g >= c_lower > 0");
      if (std::abs(g(mesh.origin) - g(mesh.origin + mesh.period)) > 1e-10)
        throw std::domain_error("ProblemSpec: g must be periodic on the mesh");
      if (variant == Variant::Window) {
        if (n < 1) throw std::domain_error("ProblemSpec: window index n >= 1");
        const double b = mesh.period / (2.0 * n);
        for (int i = 0; i < 64; ++i) {
          const double t = mesh.origin + mesh.period * i / 64.0;
          if (std::abs(g(t) - g(t + 2.0 * b)) > 1e-10)
            throw std::domain_error("ProblemSpec: window coefficient must be 2b-periodic");
        }
      }
    }
    if (variant == Variant::Scalar || variant == Variant::Resonant) {
      if (comps != 1)
        throw std::domain_error("ProblemSpec: scalar/resonant variants need N = 1");
    }
    if (variant == Variant::Resonant) {
      if (p != 2.0) throw std::domain_error("ProblemSpec: resonant variant needs p = 2");
      if (m < 0) throw std::domain_error("ProblemSpec: resonant index m >= 0");
    }
  }
};

namespace detail {

// (|v|^2 + eps^2)^{(p-2)/2}; equals 1 identically when p = 2.
inline double sigma_coef(double v2, double p, double eps) {
  if (p == 2.0) return 1.0;
  const double s2 = v2 + eps * eps;
  if (s2 <= 0.0) return 0.0;  // sigma(v) = |v|^{p-2} v vanishes at v = 0 for p > 1
  return std::pow(s2, 0.5 * (p - 2.0));
}

// Regularized integrand (1/p)(|v|^2 + eps^2)^{p/2}, the antiderivative match
// of sigma_coef so the discrete chain rule is exact.
inline double phi_p(double v2, double p, double eps) {
  if (p == 2.0) return 0.5 * (v2 + eps * eps);
  return std::pow(v2 + eps * eps, 0.5 * p) / p;
}

}  // namespace detail

// Discrete eigenvalue of minus the periodic second difference at mode m.
// Using the discrete symbol keeps the resonant quadratic form exactly
// degenerate on the sampled modes sin/cos(m w t).
inline double discrete_lambda_m(const Mesh& mesh, int m) {
  const double w = 2.0 * std::numbers::pi / mesh.period;
  const double a = m * w * mesh.h;
  return (2.0 - 2.0 * std::cos(a)) / (mesh.h * mesh.h);
}

inline double energy(const ProblemSpec& spec, const PotentialModel& model, const GridFn& x) {
  spec.validate(x.mesh(), x.comps());
  const Mesh& mesh = x.mesh();
  const double h = mesh.h, p = spec.p, eps = spec.eps_reg;
  const GridFn d = diff(x);
  double e_deriv = 0.0;
  for (int i = 0; i < mesh.points; ++i)
    e_deriv += detail::phi_p(row_dot(d.row(i), d.row(i)), p, eps);
  e_deriv *= h;

  double e_rest = 0.0;
  if (spec.has_g_term()) {
    for (int i = 0; i < mesh.points; ++i)
      e_rest += spec.g(mesh.node(i)) * detail::phi_p(row_dot(x.row(i), x.row(i)), p, eps);
    e_rest *= h;
  } else if (spec.variant == Variant::Resonant) {
    const double lam = discrete_lambda_m(mesh, spec.m);
    double q = 0.0, f = 0.0;
    for (int i = 0; i < mesh.points; ++i) {
      q += row_dot(x.row(i), x.row(i));
      if (spec.forcing) f += spec.forcing(mesh.node(i)) * x.at(i, 0);
    }
    e_rest = -0.5 * lam * q * h + f * h;
  }

  double e_j = 0.0;
  for (int i = 0; i < mesh.points; ++i) e_j += model.eval(mesh.node(i), x.row(i));
  e_j *= h * spec.j_scale();

  return e_deriv + e_rest - e_j;
}

// Strong-form left side at the nodes (everything except the potential term):
//   -(sigma(x'))' + variant terms, assembled with the periodic forward scheme.
inline GridFn strong_form_lhs(const ProblemSpec& spec, const GridFn& x) {
  const Mesh& mesh = x.mesh();
  const int M = mesh.points, N = x.comps();
  const double p = spec.p, eps = spec.eps_reg, h = mesh.h;
  const GridFn d = diff(x);
  std::vector<double> coef(static_cast<std::size_t>(M));
  for (int i = 0; i < M; ++i)
    coef[i] = detail::sigma_coef(row_dot(d.row(i), d.row(i)), p, eps);

  GridFn F(mesh, N);
  const double lam = spec.variant == Variant::Resonant ? discrete_lambda_m(mesh, spec.m) : 0.0;
  for (int i = 0; i < M; ++i) {
    const int im = (i == 0) ? M - 1 : i - 1;
    for (int c = 0; c < N; ++c)
      F.at(i, c) = -(coef[i] * d.at(i, c) - coef[im] * d.at(im, c)) / h;
    if (spec.has_g_term()) {
      const double gc =
          spec.g(mesh.node(i)) * detail::sigma_coef(row_dot(x.row(i), x.row(i)), p, eps);
      for (int c = 0; c < N; ++c) F.at(i, c) += gc * x.at(i, c);
    } else if (spec.variant == Variant::Resonant) {
      F.at(i, 0) += -lam * x.at(i, 0);
      if (spec.forcing) F.at(i, 0) += spec.forcing(mesh.node(i));
    }
  }
  return F;
}

// Gradient representative using the model's measurable selection (set
// midpoints at kinks).  This is the exact gradient of the discrete energy
// wherever the model is smooth, scaled by 1/h (PDE form): the directional
// derivative of `energy` along v equals l2h_inner(gradient_selection, v).
inline GridFn gradient_selection(const ProblemSpec& spec, const PotentialModel& model,
                                 const GridFn& x) {
  spec.validate(x.mesh(), x.comps());
  GridFn F = strong_form_lhs(spec, x);
  const double scale = spec.j_scale();
  for (int i = 0; i < F.points(); ++i) {
    const std::vector<double> u = model.subgrad(x.mesh().node(i), x.row(i));
    for (int c = 0; c < F.comps(); ++c) F.at(i, c) -= scale * u[c];
  }
  return F;
}

// Gradient representative minimized nodewise over the subdifferential set
// (projection of the fixed part onto the achievable set), where descriptors
// exist.  Falls back to the midpoint selection otherwise.
inline GridFn min_selection_gradient(const ProblemSpec& spec, const PotentialModel& model,
                                     const GridFn& x) {
  spec.validate(x.mesh(), x.comps());
  GridFn F = strong_form_lhs(spec, x);
  const double scale = spec.j_scale();
  for (int i = 0; i < F.points(); ++i) {
    const double t = x.mesh().node(i);
    if (model.set_descriptor) {
      const SubgradSet set = model.set_descriptor(t, x.row(i));
      const std::vector<double> u = set.project(F.row(i), scale);
      for (int c = 0; c < F.comps(); ++c) F.at(i, c) -= u[c];
    } else {
      const std::vector<double> u = model.subgrad(t, x.row(i));
      for (int c = 0; c < F.comps(); ++c) F.at(i, c) -= scale * u[c];
    }
  }
  return F;
}

// Discrete stand-in for m(x) = inf{ |x*| : x* in the subdifferential }:
// l2 norm of the minimal nodewise gradient scaled by h^{1/2}.
inline double residual_weak(const ProblemSpec& spec, const PotentialModel& model,
                            const GridFn& x) {
  return l2h_norm(min_selection_gradient(spec, model, x));
}

struct StrongResidual {
  double inclusion_dist = 0.0;        // max nodewise distance to the inclusion set
  double inclusion_dist_unreg = 0.0;  // same, with the unregularized p-Laplacian
  double bc_primal = 0.0;             // |x(0) - x(b)|, structurally zero
  double bc_deriv = 0.0;              // |x'(0) - x'(b)| from one-sided differences
};

inline StrongResidual residual_strong(const ProblemSpec& spec, const PotentialModel& model,
                                      const GridFn& x) {
  spec.validate(x.mesh(), x.comps());
  const Mesh& mesh = x.mesh();
  const double scale = spec.j_scale();

  auto max_dist = [&](const ProblemSpec& s) {
    const GridFn F = strong_form_lhs(s, x);
    double worst = 0.0;
    for (int i = 0; i < F.points(); ++i) {
      const double t = mesh.node(i);
      double dist;
      if (model.set_descriptor) {
        dist = model.set_descriptor(t, x.row(i)).distance(F.row(i), scale);
      } else if (model.smooth_distance(x.row(i)) > 1e-9) {
        const std::vector<double> u = model.subgrad(t, x.row(i));
        double sum = 0.0;
        for (int c = 0; c < F.comps(); ++c) {
          const double e = F.at(i, c) - scale * u[c];
          sum += e * e;
        }
        dist = std::sqrt(sum);
      } else {
        throw std::runtime_error(
            "unsupported potential: kink node without subdifferential set");
      }
      worst = std::max(worst, dist);
    }
    return worst;
  };

  StrongResidual out;
  out.inclusion_dist = max_dist(spec);
  ProblemSpec raw = spec;
  raw.eps_reg = 1e-300;  // numerically unregularized evaluation
  out.inclusion_dist_unreg = max_dist(raw);
  out.bc_primal = 0.0;
  const GridFn d = diff(x);
  double s = 0.0;
  for (int c = 0; c < x.comps(); ++c) {
    const double e = d.at(0, c) - d.at(x.points() - 1, c);
    s += e * e;
  }
  out.bc_deriv = std::sqrt(s);
  return out;
}

}  // namespace plap
