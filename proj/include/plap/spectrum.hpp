#pragma once

// Eigenvalues of the periodic scalar p-Laplacian: the closed-form ladder
// lambda_n = (2 n pi_p / b)^p and an independent shooting computation that
// integrates the first-order system and bisects on the orbit return time.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace plap {

inline double pi_p(double p) {
  if (!(p > 1.0)) throw std::domain_error("pi_p: p must lie in (1,inf)");
  const double pi = std::numbers::pi;
  return 2.0 * std::pow(p - 1.0, 1.0 / p) * (pi / p) / std::sin(pi / p);
}

inline double eigenvalue_formula(int n, double p, double b) {
  if (n < 0) throw std::domain_error("eigenvalue_formula: n >= 0");
  if (n == 0) return 0.0;
  return std::pow(2.0 * n * pi_p(p) / b, p);
}

namespace detail {

struct ShootState {
  double x, y;
};

// x' = sigma^{-1}(y) = |y|^{q-2} y,  y' = -lambda |x|^{p-2} x, regularized.
inline ShootState shoot_rhs(const ShootState& s, double lambda, double p, double eps) {
  const double q = p / (p - 1.0);
  auto pw = [eps](double v, double expo) {
    const double s2 = v * v + eps * eps;
    if (s2 <= 0.0) return 0.0;
    return std::pow(s2, 0.5 * expo) * v;
  };
  return {pw(s.y, q - 2.0), -lambda * pw(s.x, p - 2.0)};
}

inline ShootState rk4_step(const ShootState& s, double dt, double lambda, double p,
                           double eps) {
  const ShootState k1 = shoot_rhs(s, lambda, p, eps);
  const ShootState s2{s.x + 0.5 * dt * k1.x, s.y + 0.5 * dt * k1.y};
  const ShootState k2 = shoot_rhs(s2, lambda, p, eps);
  const ShootState s3{s.x + 0.5 * dt * k2.x, s.y + 0.5 * dt * k2.y};
  const ShootState k3 = shoot_rhs(s3, lambda, p, eps);
  const ShootState s4{s.x + dt * k3.x, s.y + dt * k3.y};
  const ShootState k4 = shoot_rhs(s4, lambda, p, eps);
  return {s.x + dt / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
          s.y + dt / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y)};
}

// First return time of the orbit through (0,1) to the section {x = 0, y > 0}
// (one full period).  Integrates with fixed steps dt and refines the final
// crossing by bisection inside the bracketing step.  Returns +inf if no
// return happens before t_max.
inline double return_time(double lambda, double p, double dt, double t_max,
                          double eps = 1e-10) {
  ShootState s{0.0, 1.0};
  double t = 0.0;
  bool armed = false;  // arm the section test after leaving the initial point
  int guard = 0;
  while (t < t_max && ++guard < 100000000) {
    const ShootState ns = rk4_step(s, dt, lambda, p, eps);
    const double tn = t + dt;
    if (!armed && s.x > 0.0 && ns.x > 0.0) armed = true;
    // after the single negative arch, x crosses 0 upward with y > 0
    if (armed && s.x < 0.0 && ns.x >= 0.0 && ns.y > 0.0) {
      double lo = 0.0, hi = dt;
      for (int k = 0; k < 60; ++k) {
        const double mid = 0.5 * (lo + hi);
        const ShootState sm = rk4_step(s, mid, lambda, p, eps);
        if (sm.x < 0.0)
          lo = mid;
        else
          hi = mid;
      }
      return t + 0.5 * (lo + hi);
    }
    s = ns;
    t = tn;
  }
  return std::numeric_limits<double>::infinity();
}

}  // namespace detail

// Shooting eigenvalue: bisect lambda until the orbit period equals b/n.
// Entirely independent of the closed-form ladder.
inline double shooting_eigenvalue(int n, double p, double b, double tol = 1e-10) {
  if (n < 1) throw std::domain_error("shooting_eigenvalue: n >= 1");
  if (!(p > 1.0)) throw std::domain_error("shooting_eigenvalue: p in (1,inf)");
  if (!(tol >= 1e-14)) throw std::domain_error("shooting_eigenvalue: tol too small");
  const double target = b / n;

  auto period = [&](double lambda, int steps) {
    const double dt = target / steps;
    return detail::return_time(lambda, p, dt, 16.0 * target);
  };

  int steps = 1 << 14;
  // Bracket: period is strictly decreasing in lambda.
  double lo = 1.0, hi = 1.0;
  for (int k = 0; k < 200 && !(period(lo, steps) > target); ++k) lo *= 0.5;
  for (int k = 0; k < 200 && !(period(hi, steps) < target); ++k) hi *= 2.0;
  if (!(period(lo, steps) > target) || !(period(hi, steps) < target))
    throw std::runtime_error("shooting_eigenvalue: failed to bracket lambda for n=" +
                             std::to_string(n));

  auto bisect = [&](double a, double c, int st) {
    for (int k = 0; k < 80; ++k) {
      const double mid = 0.5 * (a + c);
      if (period(mid, st) > target)
        a = mid;
      else
        c = mid;
      if (c - a <= 1e-12 * c) break;
    }
    return 0.5 * (a + c);
  };

  double lambda = bisect(lo, hi, steps);
  // Refine the integrator until the eigenvalue stabilizes.
  for (int r = 0; r < 4; ++r) {
    steps *= 2;
    const double next = bisect(std::max(lo, 0.9 * lambda), std::min(hi, 1.1 * lambda), steps);
    const double change = std::abs(next - lambda) / std::max(next, 1e-300);
    lambda = next;
    if (change < tol / 10.0) break;
  }
  return lambda;
}

struct SpectrumRow {
  int n = 0;
  double lambda_formula = 0.0;
  double lambda_shooting = 0.0;
  double rel_err = 0.0;
};

struct SpectrumResult {
  std::vector<SpectrumRow> rows;
  double p = 2.0;
  double b = 1.0;
};

inline SpectrumResult verify_table(double p, double b, int n_max, double tol = 1e-10) {
  if (n_max > 8) throw std::domain_error("verify_table: n_max <= 8");
  SpectrumResult out;
  out.p = p;
  out.b = b;
  for (int n = 0; n <= n_max; ++n) {
    SpectrumRow row;
    row.n = n;
    row.lambda_formula = eigenvalue_formula(n, p, b);
    row.lambda_shooting = n == 0 ? 0.0 : shooting_eigenvalue(n, p, b, tol);
    row.rel_err = std::abs(row.lambda_formula - row.lambda_shooting) /
                  std::max(row.lambda_formula, 1e-300);
    out.rows.push_back(row);
  }
  for (std::size_t k = 0; k + 1 < out.rows.size(); ++k) {
    if (!(out.rows[k + 1].lambda_formula > out.rows[k].lambda_formula))
      throw std::runtime_error("verify_table: ladder not strictly increasing");
  }
  for (const auto& r : out.rows)
    if (r.lambda_formula < 0.0 || r.lambda_shooting < 0.0)
      throw std::runtime_error("verify_table: negative eigenvalue");
  return out;
}

}  // namespace plap
