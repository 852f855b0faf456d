#pragma once

// Locally Lipschitz potentials j(t,x): evaluation, Clarke subgradient
// selection, sampled generalized directional derivatives, exact
// subdifferential sets for the built-in examples, and growth metadata.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "plap/grid.hpp"
#include "plap/rng.hpp"

namespace plap {

inline constexpr double kKinkEps = 1e-12;  // classification width of a kink locus

// Exact convex subdifferential set at one point.
struct SubgradSet {
  enum class Kind { point, segment, ball, interval };
  Kind kind = Kind::point;
  std::vector<double> a, b;  // point/ball center: a; segment endpoints: a,b
  double radius = 0.0;
  double lo = 0.0, hi = 0.0;  // interval (scalar models)

  static SubgradSet point(std::vector<double> u) {
    SubgradSet s;
    s.kind = Kind::point;
    s.a = std::move(u);
    return s;
  }
  static SubgradSet segment(std::vector<double> p, std::vector<double> q) {
    SubgradSet s;
    s.kind = Kind::segment;
    s.a = std::move(p);
    s.b = std::move(q);
    return s;
  }
  static SubgradSet ball(std::vector<double> center, double r) {
    SubgradSet s;
    s.kind = Kind::ball;
    s.a = std::move(center);
    s.radius = r;
    return s;
  }
  static SubgradSet interval(double lo, double hi) {
    SubgradSet s;
    s.kind = Kind::interval;
    s.lo = lo;
    s.hi = hi;
    return s;
  }

  // Nearest point of the (lambda-scaled) set to w.
  std::vector<double> project(std::span<const double> w, double lambda = 1.0) const {
    std::vector<double> out(w.size(), 0.0);
    switch (kind) {
      case Kind::point:
        for (std::size_t k = 0; k < w.size(); ++k) out[k] = lambda * a[k];
        break;
      case Kind::ball: {
        double d = 0.0;
        for (std::size_t k = 0; k < w.size(); ++k) {
          out[k] = w[k] - lambda * a[k];
          d += out[k] * out[k];
        }
        d = std::sqrt(d);
        const double r = std::abs(lambda) * radius;
        const double f = (d <= r || d == 0.0) ? 1.0 : r / d;
        for (std::size_t k = 0; k < w.size(); ++k) out[k] = lambda * a[k] + f * out[k];
        break;
      }
      case Kind::segment: {
        double num = 0.0, den = 0.0;
        for (std::size_t k = 0; k < w.size(); ++k) {
          const double e = lambda * (b[k] - a[k]);
          num += (w[k] - lambda * a[k]) * e;
          den += e * e;
        }
        const double tpar = (den > 0.0) ? std::clamp(num / den, 0.0, 1.0) : 0.0;
        for (std::size_t k = 0; k < w.size(); ++k)
          out[k] = lambda * a[k] + tpar * lambda * (b[k] - a[k]);
        break;
      }
      case Kind::interval: {
        double L = lambda * lo, H = lambda * hi;
        if (L > H) std::swap(L, H);
        out[0] = std::clamp(w[0], L, H);
        break;
      }
    }
    return out;
  }

  double distance(std::span<const double> w, double lambda = 1.0) const {
    const std::vector<double> p = project(w, lambda);
    double s = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) s += (w[k] - p[k]) * (w[k] - p[k]);
    return std::sqrt(s);
  }

  // Extreme values along the first coordinate (scalar models).
  double min_scalar() const {
    switch (kind) {
      case Kind::point: return a[0];
      case Kind::segment: return std::min(a[0], b[0]);
      case Kind::ball: return a[0] - radius;
      case Kind::interval: return lo;
    }
    return 0.0;
  }
  double max_scalar() const {
    switch (kind) {
      case Kind::point: return a[0];
      case Kind::segment: return std::max(a[0], b[0]);
      case Kind::ball: return a[0] + radius;
      case Kind::interval: return hi;
    }
    return 0.0;
  }

  std::vector<double> midpoint(int dim) const {
    switch (kind) {
      case Kind::point: return a;
      case Kind::ball: return a;
      case Kind::segment: {
        std::vector<double> m(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) m[k] = 0.5 * (a[k] + b[k]);
        return m;
      }
      case Kind::interval: return std::vector<double>{0.5 * (lo + hi)};
    }
    return std::vector<double>(static_cast<std::size_t>(dim), 0.0);
  }
};

struct Growth {
  double a1 = 0.0;       // constant part of the subgradient bound
  double c1 = 0.0;       // coefficient of |x|^{r-1}
  double r = 1.0;        // growth exponent
  double mu = 0.0;       // superlinearity exponent (0: not superlinear)
  double M_thresh = 1.0; // radius past which the mu-condition is claimed
};

struct PotentialModel {
  std::string name;
  int dim = 1;
  bool autonomous = true;

  std::function<double(double, std::span<const double>)> eval;
  std::function<std::vector<double>(double, std::span<const double>)> subgrad;
  std::function<SubgradSet(double, std::span<const double>)> set_descriptor;  // may be null
  std::function<double(double, std::span<const double>, std::span<const double>)>
      j0_exact;  // may be null
  std::function<double(std::span<const double>)> kink_distance;  // null: smooth everywhere
  std::function<std::vector<double>(std::span<const double>)> kink_project;  // may be null
  // Analytic d(subgrad)/dx (row-major dim x dim), for Newton polishing.  Null: FD.
  std::function<void(double, std::span<const double>, std::span<double>)> subgrad_jacobian;

  Growth growth;
  std::vector<double> x_star;  // direction with positive integral of j, when known

  void require_dim(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim)
      throw std::invalid_argument("potential '" + name + "': expected dimension " +
                                  std::to_string(dim));
  }
  double smooth_distance(std::span<const double> x) const {
    return kink_distance ? kink_distance(x) : std::numeric_limits<double>::infinity();
  }
};

inline double eval_j(const PotentialModel& m, double t, std::span<const double> x) {
  m.require_dim(x);
  return m.eval(t, x);
}

inline std::vector<double> select_subgrad(const PotentialModel& m, double t,
                                          std::span<const double> x) {
  m.require_dim(x);
  return m.subgrad(t, x);
}

// Sampled generalized directional derivative: max difference quotient over
// perturbed base points and vanishing steps, mirroring the lim sup definition.
inline double j0_estimate(const PotentialModel& m, double t, std::span<const double> x,
                          std::span<const double> dir,
                          std::vector<double> scales = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
  m.require_dim(x);
  if (scales.empty()) throw std::domain_error("j0_estimate: empty scale list");
  for (std::size_t k = 0; k < scales.size(); ++k) {
    if (!(scales[k] > 0.0) || (k > 0 && scales[k] > scales[k - 1]))
      throw std::domain_error("j0_estimate: scales must be positive and descending");
  }
  double dn = 0.0;
  for (double w : dir) dn += w * w;
  if (dn == 0.0) return 0.0;

  const int n_base = 16;
  const double pert = 1e-4;
  Rng rng(0x9e3779b97f4a7c15ULL);
  std::vector<std::vector<double>> bases;
  bases.emplace_back(x.begin(), x.end());
  for (int k = 0; k < n_base; ++k) {
    std::vector<double> xp(x.begin(), x.end());
    for (auto& v : xp) v += pert * rng.normal();
    bases.push_back(std::move(xp));
  }

  // One estimate per step: max difference quotient over the perturbed base
  // points.  The lim sup is approached along the vanishing-step end of the
  // ladder, so the two smallest scales decide the value (larger scales carry
  // an O(lambda) curvature bias on smooth models).
  std::vector<double> per_scale(scales.size(), -std::numeric_limits<double>::infinity());
  std::vector<double> xs(x.size());
  for (const auto& base : bases) {
    const double j0v = m.eval(t, base);
    for (std::size_t si = 0; si < scales.size(); ++si) {
      const double lam = scales[si];
      for (std::size_t k = 0; k < xs.size(); ++k) xs[k] = base[k] + lam * dir[k];
      per_scale[si] = std::max(per_scale[si], (m.eval(t, xs) - j0v) / lam);
    }
  }
  double best = per_scale.back();
  if (per_scale.size() > 1) best = std::max(best, per_scale[per_scale.size() - 2]);
  return best;
}

// Euclidean distance from w to the subdifferential set at (t,x).
inline double subgrad_distance(const PotentialModel& m, double t, std::span<const double> x,
                               std::span<const double> w) {
  m.require_dim(x);
  if (m.set_descriptor) return m.set_descriptor(t, x).distance(w);
  if (m.smooth_distance(x) > 1e-9) {
    const std::vector<double> u = m.subgrad(t, x);
    double s = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) s += (w[k] - u[k]) * (w[k] - u[k]);
    return std::sqrt(s);
  }
  throw std::runtime_error("unsupported potential: no subdifferential set at kink of '" +
                           m.name + "'");
}

namespace detail {

inline std::vector<double> scaled_copy(std::span<const double> x, double a) {
  std::vector<double> out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = a * x[k];
  return out;
}

inline std::vector<double> unit_first(int N, double s) {
  std::vector<double> v(static_cast<std::size_t>(N), 0.0);
  v[0] = s;
  return v;
}

// Smallest doubling radius past `from` where j(s e1) is strictly positive.
inline double positive_radius(const std::function<double(double)>& jr, double from) {
  double s = std::max(from, 1.0);
  for (int k = 0; k < 60; ++k) {
    if (jr(s) > 1e-9) return s;
    s *= 2.0;
  }
  return s;
}

}  // namespace detail

// Remark after Theorem 1: j(x) = -|x| inside the unit ball and
// |x|^mu/mu - |x| ln|x| + c outside, c = -(mu+1)/mu.  Superlinear (mu > p).
inline PotentialModel thm1_example(double mu, double p, int N = 1) {
  if (!(mu > p)) throw std::domain_error("thm1_example: requires mu > p");
  if (N < 1) throw std::domain_error("thm1_example: N >= 1");
  const double c = -(mu + 1.0) / mu;
  PotentialModel m;
  m.name = "thm1_example";
  m.dim = N;
  m.eval = [mu, c](double, std::span<const double> x) {
    const double s = row_norm(x);
    if (s <= 1.0) return -s;
    return std::pow(s, mu) / mu - s * std::log(s) + c;
  };
  auto grad_outer = [mu](std::span<const double> x, double s) {
    const double f = std::pow(s, mu - 2.0) - (std::log(s) + 1.0) / s;
    return detail::scaled_copy(x, f);
  };
  m.subgrad = [mu, grad_outer](double, std::span<const double> x) {
    const double s = row_norm(x);
    if (s <= kKinkEps) return std::vector<double>(x.size(), 0.0);
    if (std::abs(s - 1.0) <= kKinkEps) return detail::scaled_copy(x, -0.5 / s);
    if (s < 1.0) return detail::scaled_copy(x, -1.0 / s);
    return grad_outer(x, s);
  };
  m.set_descriptor = [mu, grad_outer](double, std::span<const double> x) {
    const double s = row_norm(x);
    if (s <= kKinkEps)
      return SubgradSet::ball(std::vector<double>(x.size(), 0.0), 1.0);
    if (std::abs(s - 1.0) <= kKinkEps)
      return SubgradSet::segment(detail::scaled_copy(x, -1.0 / s),
                                 std::vector<double>(x.size(), 0.0));
    if (s < 1.0) return SubgradSet::point(detail::scaled_copy(x, -1.0 / s));
    return SubgradSet::point(grad_outer(x, s));
  };
  m.j0_exact = [mu, grad_outer](double, std::span<const double> x,
                                std::span<const double> d) {
    const double s = row_norm(x);
    if (s <= kKinkEps) return row_norm(d);
    if (std::abs(s - 1.0) <= kKinkEps) return std::max(-row_dot(x, d) / s, 0.0);
    if (s < 1.0) return -row_dot(x, d) / s;
    const std::vector<double> g = grad_outer(x, s);
    return row_dot(g, d);
  };
  m.kink_distance = [](std::span<const double> x) {
    const double s = row_norm(x);
    return std::min(s, std::abs(s - 1.0));
  };
  m.kink_project = [](std::span<const double> x) {
    const double s = row_norm(x);
    if (s < 0.5) return std::vector<double>(x.size(), 0.0);
    return detail::scaled_copy(x, 1.0 / s);
  };
  m.growth = {1.0, 1.0 + 1.0 / (mu - 1.0), mu, mu, 1.0};
  const double s0 = detail::positive_radius(
      [&](double s) { return std::pow(s, mu) / mu - s * std::log(s) + c; }, 2.0);
  m.x_star = detail::unit_first(N, s0);
  return m;
}

// Remark after Theorem 2: j(x) = -|x|^p/p inside the unit ball and
// |x|^r/r + cos|x| + c outside, r < p.  The continuity constant is
// c = -1/p - 1/r - cos 1, which matches the stated subdifferential
// conv{-x, x - (sin 1) x} on the unit sphere.
inline PotentialModel thm2_example(double r, double p, int N = 1) {
  if (!(r < p)) throw std::domain_error("thm2_example: requires r < p");
  if (!(r >= 1.0)) throw std::domain_error("thm2_example: requires r >= 1");
  if (N < 1) throw std::domain_error("thm2_example: N >= 1");
  const double c = -1.0 / p - 1.0 / r - std::cos(1.0);
  PotentialModel m;
  m.name = "thm2_example";
  m.dim = N;
  m.eval = [r, p, c](double, std::span<const double> x) {
    const double s = row_norm(x);
    if (s < 1.0) return -std::pow(s, p) / p;
    return std::pow(s, r) / r + std::cos(s) + c;
  };
  auto grad_inner = [p](std::span<const double> x, double s) {
    return detail::scaled_copy(x, -std::pow(s, p - 2.0));
  };
  auto grad_outer = [r](std::span<const double> x, double s) {
    return detail::scaled_copy(x, std::pow(s, r - 2.0) - std::sin(s) / s);
  };
  m.subgrad = [grad_inner, grad_outer](double, std::span<const double> x) {
    const double s = row_norm(x);
    if (s <= kKinkEps) return std::vector<double>(x.size(), 0.0);
    if (std::abs(s - 1.0) <= kKinkEps)
      return detail::scaled_copy(x, -0.5 * std::sin(1.0) / s);
    if (s < 1.0) return grad_inner(x, s);
    return grad_outer(x, s);
  };
  m.set_descriptor = [grad_inner, grad_outer](double, std::span<const double> x) {
    const double s = row_norm(x);
    if (s <= kKinkEps) return SubgradSet::point(std::vector<double>(x.size(), 0.0));
    if (std::abs(s - 1.0) <= kKinkEps)
      return SubgradSet::segment(detail::scaled_copy(x, -1.0 / s),
                                 detail::scaled_copy(x, (1.0 - std::sin(1.0)) / s));
    if (s < 1.0) return SubgradSet::point(grad_inner(x, s));
    return SubgradSet::point(grad_outer(x, s));
  };
  m.j0_exact = [grad_inner, grad_outer](double, std::span<const double> x,
                                        std::span<const double> d) {
    const double s = row_norm(x);
    if (s <= kKinkEps) return 0.0;
    if (std::abs(s - 1.0) <= kKinkEps) {
      const double xd = row_dot(x, d) / s;
      return std::max(-xd, (1.0 - std::sin(1.0)) * xd);
    }
    const std::vector<double> g = s < 1.0 ? grad_inner(x, s) : grad_outer(x, s);
    return row_dot(g, d);
  };
  m.kink_distance = [](std::span<const double> x) {
    return std::abs(row_norm(x) - 1.0);
  };
  m.kink_project = [](std::span<const double> x) {
    const double s = row_norm(x);
    if (s <= kKinkEps) return std::vector<double>(x.begin(), x.end());
    return detail::scaled_copy(x, 1.0 / s);
  };
  m.growth = {1.0, 1.0, r, 0.0, 1.0};
  const double s0 = detail::positive_radius(
      [&](double s) { return std::pow(s, r) / r + std::cos(s) + c; }, 2.0);
  m.x_star = detail::unit_first(N, s0);
  return m;
}

// Remark after Proposition 8: j(x) = max{x^{1/3}, x^{1/2}} + ln(1+|x|)
// + cos x + x for x >= 0, extended evenly (j(x) = j(-x)); this reproduces
// the stated slopes j+ = 1, j- = -1 and G1- = G2+ = 0.
inline PotentialModel prop8_example() {
  PotentialModel m;
  m.name = "prop8_example";
  m.dim = 1;
  auto mterm = [](double s) { return s <= 1.0 ? std::cbrt(s) : std::sqrt(s); };
  auto mslope = [](double s) {
    return s <= 1.0 ? 1.0 / (3.0 * std::cbrt(s) * std::cbrt(s)) : 0.5 / std::sqrt(s);
  };
  m.eval = [mterm](double, std::span<const double> x) {
    const double s = std::abs(x[0]);
    return mterm(s) + std::log1p(s) + std::cos(x[0]) + s;
  };
  auto slope = [mslope](double v) {  // derivative at |v| not in {0,1}
    const double s = std::abs(v);
    const double ds = mslope(s) + 1.0 / (1.0 + s) + 1.0;  // d/ds of the even part
    return (v > 0.0 ? ds : -ds) - std::sin(v);
  };
  m.subgrad = [slope, mslope](double, std::span<const double> x) {
    const double v = x[0], s = std::abs(v);
    if (s <= kKinkEps) return std::vector<double>{0.0};
    if (std::abs(s - 1.0) <= kKinkEps) {
      const double inner = 1.0 / 3.0 + 0.5 + 1.0;  // slopes of the even part at 1-+
      const double outer = 0.5 + 0.5 + 1.0;
      const double mid = 0.5 * (inner + outer);
      return std::vector<double>{(v > 0.0 ? mid : -mid) - std::sin(v)};
    }
    return std::vector<double>{slope(v)};
  };
  m.set_descriptor = [slope](double, std::span<const double> x) {
    const double v = x[0], s = std::abs(v);
    if (s <= kKinkEps) return SubgradSet::interval(-1e300, 1e300);
    if (std::abs(s - 1.0) <= kKinkEps) {
      const double inner = (v > 0.0 ? 1.0 : -1.0) * (1.0 / 3.0 + 0.5 + 1.0) - std::sin(v);
      const double outer = (v > 0.0 ? 1.0 : -1.0) * (0.5 + 0.5 + 1.0) - std::sin(v);
      return SubgradSet::interval(std::min(inner, outer), std::max(inner, outer));
    }
    return SubgradSet::point({slope(v)});
  };
  m.kink_distance = [](std::span<const double> x) {
    const double s = std::abs(x[0]);
    return std::min(s, std::abs(s - 1.0));
  };
  m.growth = {40.0, 1.0, 2.0, 0.0, 1.0};
  m.x_star = {4.0};
  return m;
}

// j(x) = |x|^4 / 4, smooth superlinear reference model.
inline PotentialModel quartic(int N = 1) {
  if (N < 1) throw std::domain_error("quartic: N >= 1");
  PotentialModel m;
  m.name = "quartic";
  m.dim = N;
  m.eval = [](double, std::span<const double> x) {
    const double s2 = row_dot(x, x);
    return 0.25 * s2 * s2;
  };
  m.subgrad = [](double, std::span<const double> x) {
    return detail::scaled_copy(x, row_dot(x, x));
  };
  m.set_descriptor = [](double, std::span<const double> x) {
    return SubgradSet::point(detail::scaled_copy(x, row_dot(x, x)));
  };
  m.j0_exact = [](double, std::span<const double> x, std::span<const double> d) {
    return row_dot(x, x) * row_dot(x, d);
  };
  m.subgrad_jacobian = [](double, std::span<const double> x, std::span<double> J) {
    const int N = static_cast<int>(x.size());
    const double s2 = row_dot(x, x);
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k)
        J[static_cast<std::size_t>(i) * N + k] = 2.0 * x[i] * x[k] + (i == k ? s2 : 0.0);
  };
  m.growth = {0.0, 1.0, 4.0, 4.0, 1.0};
  m.x_star = detail::unit_first(N, 2.0);
  return m;
}

// j(x) = |x|^q (scalar normalization without 1/q), for hypothesis-failure probes.
inline PotentialModel pnorm_model(double q, int N = 1) {
  if (!(q > 1.0)) throw std::domain_error("pnorm_model: q > 1");
  PotentialModel m;
  m.name = "pnorm";
  m.dim = N;
  m.eval = [q](double, std::span<const double> x) { return std::pow(row_norm(x), q); };
  m.subgrad = [q](double, std::span<const double> x) {
    const double s = row_norm(x);
    if (s <= kKinkEps) return std::vector<double>(x.size(), 0.0);
    return detail::scaled_copy(x, q * std::pow(s, q - 2.0));
  };
  m.set_descriptor = [q](double, std::span<const double> x) {
    const double s = row_norm(x);
    if (s <= kKinkEps) return SubgradSet::point(std::vector<double>(x.size(), 0.0));
    return SubgradSet::point(detail::scaled_copy(x, q * std::pow(s, q - 2.0)));
  };
  m.j0_exact = [q](double, std::span<const double> x, std::span<const double> d) {
    const double s = row_norm(x);
    if (s <= kKinkEps) return 0.0;
    return q * std::pow(s, q - 2.0) * row_dot(x, d);
  };
  m.growth = {0.0, q, q, 0.0, 1.0};
  m.x_star = detail::unit_first(N, 2.0);
  return m;
}

// j(x) = |x| on the line; interval subdifferential [-1,1] at the origin.
inline PotentialModel abs_model() {
  PotentialModel m;
  m.name = "abs";
  m.dim = 1;
  m.eval = [](double, std::span<const double> x) { return std::abs(x[0]); };
  m.subgrad = [](double, std::span<const double> x) {
    if (std::abs(x[0]) <= kKinkEps) return std::vector<double>{0.0};
    return std::vector<double>{x[0] > 0.0 ? 1.0 : -1.0};
  };
  m.set_descriptor = [](double, std::span<const double> x) {
    if (std::abs(x[0]) <= kKinkEps) return SubgradSet::interval(-1.0, 1.0);
    return SubgradSet::point({x[0] > 0.0 ? 1.0 : -1.0});
  };
  m.j0_exact = [](double, std::span<const double> x, std::span<const double> d) {
    if (std::abs(x[0]) <= kKinkEps) return std::abs(d[0]);
    return (x[0] > 0.0 ? 1.0 : -1.0) * d[0];
  };
  m.kink_distance = [](std::span<const double> x) { return std::abs(x[0]); };
  m.kink_project = [](std::span<const double>) { return std::vector<double>{0.0}; };
  m.growth = {1.0, 0.0, 1.0, 0.0, 1.0};
  m.x_star = {1.0};
  return m;
}

// j(t,x) = h(t) x (scalar linear forcing potential).
inline PotentialModel linear_forced(std::function<double(double)> h, double h_bound = 1.0) {
  PotentialModel m;
  m.name = "linear_forced";
  m.dim = 1;
  m.autonomous = false;
  auto hf = std::move(h);
  m.eval = [hf](double t, std::span<const double> x) { return hf(t) * x[0]; };
  m.subgrad = [hf](double t, std::span<const double>) { return std::vector<double>{hf(t)}; };
  m.set_descriptor = [hf](double t, std::span<const double>) {
    return SubgradSet::point({hf(t)});
  };
  m.j0_exact = [hf](double t, std::span<const double>, std::span<const double> d) {
    return hf(t) * d[0];
  };
  m.subgrad_jacobian = [](double, std::span<const double>, std::span<double> J) { J[0] = 0.0; };
  m.growth = {h_bound, 0.0, 1.0, 0.0, 1.0};
  m.x_star = {1.0};
  return m;
}

inline PotentialModel zero_potential(int N = 1) {
  PotentialModel m;
  m.name = "zero";
  m.dim = N;
  m.eval = [](double, std::span<const double>) { return 0.0; };
  m.subgrad = [](double, std::span<const double> x) {
    return std::vector<double>(x.size(), 0.0);
  };
  m.set_descriptor = [](double, std::span<const double> x) {
    return SubgradSet::point(std::vector<double>(x.size(), 0.0));
  };
  m.j0_exact = [](double, std::span<const double>, std::span<const double>) { return 0.0; };
  m.subgrad_jacobian = [](double, std::span<const double> x, std::span<double> J) {
    for (std::size_t k = 0; k < x.size() * x.size(); ++k) J[k] = 0.0;
  };
  m.growth = {0.0, 0.0, 1.0, 0.0, 1.0};
  return m;
}

// Name + parameter registry used by the CLI configuration layer.
inline PotentialModel builtin(const std::string& name,
                              const std::map<std::string, double>& params = {}) {
  auto get = [&](const char* key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  const int N = static_cast<int>(get("N", 1.0));
  if (name == "thm1_example") return thm1_example(get("mu", 3.0), get("p", 2.0), N);
  if (name == "thm2_example") return thm2_example(get("r", 2.0), get("p", 3.0), N);
  if (name == "prop8_example") return prop8_example();
  if (name == "quartic") return quartic(N);
  if (name == "abs") return abs_model();
  if (name == "zero") return zero_potential(N);
  if (name == "linear_forced") {
    const double amp = get("amp", 1.0);
    const double mode = get("mode", 1.0);
    const double period = get("period", 2.0 * std::numbers::pi);
    auto h = [amp, mode, period](double t) {
      return amp * std::sin(2.0 * std::numbers::pi * mode * t / period);
    };
    return linear_forced(h, std::abs(amp));
  }
  throw std::domain_error("unknown potential '" + name + "'");
}

}  // namespace plap
