#pragma once

// Discrete periodic function space: uniform mesh on a period, periodic
// forward differences, discrete Lp / W^{1,p} norms and the subspace
// projections (mean-zero split, Fourier mode spans) used by the saddle
// point machinery.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plap {

struct Mesh {
  double period = 0.0;  // length of the periodicity cell
  int points = 0;       // node count; node `points` is identified with node 0
  double origin = 0.0;  // time of node 0
  double h = 0.0;

  double node(int i) const { return origin + h * static_cast<double>(i); }

  bool same_as(const Mesh& o) const {
    return points == o.points && period == o.period && origin == o.origin;
  }
};

inline Mesh make_mesh(double b, int M, double origin = 0.0) {
  if (!(b > 0.0) || !std::isfinite(b))
    throw std::domain_error("make_mesh: period must be positive");
  if (M < 8) throw std::domain_error("make_mesh: need at least 8 nodes");
  Mesh m;
  m.period = b;
  m.points = M;
  m.origin = origin;
  m.h = b / static_cast<double>(M);
  return m;
}

// Real function on a periodic mesh with values in R^N, stored row-major
// (one row per node).  No duplicate endpoint: x(origin + period) is row 0.
class GridFn {
 public:
  GridFn() = default;
  GridFn(const Mesh& mesh, int comps)
      : mesh_(mesh), comps_(comps),
        v_(static_cast<std::size_t>(mesh.points) * comps, 0.0) {
    if (comps < 1) throw std::domain_error("GridFn: comps must be >= 1");
  }

  static GridFn constant(const Mesh& mesh, std::span<const double> value) {
    GridFn f(mesh, static_cast<int>(value.size()));
    for (int i = 0; i < mesh.points; ++i)
      for (int c = 0; c < f.comps_; ++c) f.at(i, c) = value[c];
    return f;
  }

  static GridFn constant(const Mesh& mesh, double value) {
    return constant(mesh, std::span<const double>(&value, 1));
  }

  static GridFn sample(const Mesh& mesh, const std::function<double(double)>& f) {
    GridFn g(mesh, 1);
    for (int i = 0; i < mesh.points; ++i) g.at(i, 0) = f(mesh.node(i));
    return g;
  }

  static GridFn sample(const Mesh& mesh, int comps,
                       const std::function<void(double, std::span<double>)>& f) {
    GridFn g(mesh, comps);
    for (int i = 0; i < mesh.points; ++i) f(mesh.node(i), g.row(i));
    return g;
  }

  const Mesh& mesh() const { return mesh_; }
  int comps() const { return comps_; }
  int points() const { return mesh_.points; }
  std::size_t size() const { return v_.size(); }

  double& at(int i, int c) { return v_[static_cast<std::size_t>(i) * comps_ + c]; }
  double at(int i, int c) const { return v_[static_cast<std::size_t>(i) * comps_ + c]; }

  std::span<double> row(int i) {
    return {v_.data() + static_cast<std::size_t>(i) * comps_, static_cast<std::size_t>(comps_)};
  }
  std::span<const double> row(int i) const {
    return {v_.data() + static_cast<std::size_t>(i) * comps_, static_cast<std::size_t>(comps_)};
  }

  std::span<double> flat() { return v_; }
  std::span<const double> flat() const { return v_; }

  GridFn& operator*=(double a) {
    for (auto& w : v_) w *= a;
    return *this;
  }
  GridFn& operator+=(const GridFn& y) {
    require_same_space(y);
    for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += y.v_[k];
    return *this;
  }
  GridFn& operator-=(const GridFn& y) {
    require_same_space(y);
    for (std::size_t k = 0; k < v_.size(); ++k) v_[k] -= y.v_[k];
    return *this;
  }
  void add_scaled(double a, const GridFn& y) {
    require_same_space(y);
    for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += a * y.v_[k];
  }

  friend GridFn operator*(double a, GridFn x) {
    x *= a;
    return x;
  }
  friend GridFn operator+(GridFn x, const GridFn& y) {
    x += y;
    return x;
  }
  friend GridFn operator-(GridFn x, const GridFn& y) {
    x -= y;
    return x;
  }

  void require_same_space(const GridFn& y) const {
    if (!mesh_.same_as(y.mesh_) || comps_ != y.comps_)
      throw std::invalid_argument("GridFn: mesh/component mismatch");
  }

  bool all_finite() const {
    for (double w : v_)
      if (!std::isfinite(w)) return false;
    return true;
  }

 private:
  Mesh mesh_;
  int comps_ = 0;
  std::vector<double> v_;
};

inline double row_norm(std::span<const double> r) {
  double s = 0.0;
  for (double w : r) s += w * w;
  return std::sqrt(s);
}

inline double row_dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

// Forward difference with periodic wrap: (diff x)_i = (x_{i+1 mod M} - x_i)/h.
inline GridFn diff(const GridFn& x) {
  const Mesh& m = x.mesh();
  GridFn d(m, x.comps());
  const int M = m.points;
  for (int i = 0; i < M; ++i) {
    const int j = (i + 1 == M) ? 0 : i + 1;
    for (int c = 0; c < x.comps(); ++c) d.at(i, c) = (x.at(j, c) - x.at(i, c)) / m.h;
  }
  return d;
}

// Rectangle-rule Lp norm: (sum_i |x_i|^p h)^{1/p}, |.| the Euclidean row norm.
inline double lp_norm(const GridFn& x, double p) {
  if (!(p > 1.0)) throw std::domain_error("lp_norm: p must be > 1");
  double s = 0.0;
  for (int i = 0; i < x.points(); ++i) s += std::pow(row_norm(x.row(i)), p);
  return std::pow(s * x.mesh().h, 1.0 / p);
}

inline double w1p_norm(const GridFn& x, double p) {
  if (!(p > 1.0)) throw std::domain_error("w1p_norm: p must be > 1");
  const double a = lp_norm(x, p), b = lp_norm(diff(x), p);
  return std::pow(std::pow(a, p) + std::pow(b, p), 1.0 / p);
}

inline double l2h_inner(const GridFn& a, const GridFn& b) {
  a.require_same_space(b);
  double s = 0.0;
  const auto fa = a.flat(), fb = b.flat();
  for (std::size_t k = 0; k < fa.size(); ++k) s += fa[k] * fb[k];
  return s * a.mesh().h;
}

inline double l2h_norm(const GridFn& a) { return std::sqrt(std::max(0.0, l2h_inner(a, a))); }

inline double linf_norm(const GridFn& x) {
  double s = 0.0;
  for (int i = 0; i < x.points(); ++i) s = std::max(s, row_norm(x.row(i)));
  return s;
}

// Splitting W^{1,p}_per = R^N (+) V with V the mean-zero part.
inline std::pair<std::vector<double>, GridFn> mean_zero_project(const GridFn& x) {
  std::vector<double> mean(static_cast<std::size_t>(x.comps()), 0.0);
  for (int i = 0; i < x.points(); ++i)
    for (int c = 0; c < x.comps(); ++c) mean[c] += x.at(i, c);
  for (auto& m : mean) m /= static_cast<double>(x.points());
  GridFn v = x;
  for (int i = 0; i < v.points(); ++i)
    for (int c = 0; c < v.comps(); ++c) v.at(i, c) -= mean[c];
  return {std::move(mean), std::move(v)};
}

// Samples of sin(k w t) / cos(k w t) on the mesh, w = 2 pi / period.
inline GridFn fourier_mode(const Mesh& mesh, int k, bool cosine) {
  const double w = 2.0 * std::numbers::pi / mesh.period;
  GridFn g(mesh, 1);
  for (int i = 0; i < mesh.points; ++i) {
    const double a = w * k * mesh.node(i);
    g.at(i, 0) = cosine ? std::cos(a) : std::sin(a);
  }
  return g;
}

// Analytic derivative of the same mode, for spectrally exact Rayleigh quotients.
inline GridFn fourier_mode_deriv(const Mesh& mesh, int k, bool cosine) {
  const double w = 2.0 * std::numbers::pi / mesh.period;
  GridFn g(mesh, 1);
  for (int i = 0; i < mesh.points; ++i) {
    const double a = w * k * mesh.node(i);
    g.at(i, 0) = cosine ? -w * k * std::sin(a) : w * k * std::cos(a);
  }
  return g;
}

// Orthogonal projection (discrete Fourier) of a scalar GridFn onto
// span{sin k w t, cos k w t : k in modes}.  Requires M even and modes < M/2,
// which keeps the discrete trigonometric system exactly orthogonal.
inline GridFn fourier_project(const GridFn& x, const std::vector<int>& modes) {
  if (x.comps() != 1)
    throw std::invalid_argument("fourier_project: scalar functions only");
  const Mesh& m = x.mesh();
  if (m.points % 2 != 0)
    throw std::invalid_argument("fourier_project: node count must be even");
  const int M = m.points;
  GridFn out(m, 1);
  std::vector<int> ms = modes;
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  for (int k : ms) {
    if (k < 0 || k >= M / 2)
      throw std::invalid_argument("fourier_project: mode " + std::to_string(k) +
                                  " aliases on this mesh");
    const GridFn ck = fourier_mode(m, k, true);
    double a = 0.0;
    for (int i = 0; i < M; ++i) a += x.at(i, 0) * ck.at(i, 0);
    a *= (k == 0 ? 1.0 : 2.0) / static_cast<double>(M);
    out.add_scaled(a, ck);
    if (k > 0) {
      const GridFn sk = fourier_mode(m, k, false);
      double b = 0.0;
      for (int i = 0; i < M; ++i) b += x.at(i, 0) * sk.at(i, 0);
      b *= 2.0 / static_cast<double>(M);
      out.add_scaled(b, sk);
    }
  }
  return out;
}

}  // namespace plap
