#pragma once

// Seeded sampling helpers.  Uniform/normal draws are derived from the raw
// mt19937_64 stream so runs are reproducible across standard libraries.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "plap/grid.hpp"

namespace plap {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  int uniform_int(int n) {  // 0 .. n-1
    return static_cast<int>(eng_() % static_cast<std::uint64_t>(n));
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01(), u2 = uniform01();
    while (u1 <= 1e-300) u1 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  GridFn noise(const Mesh& mesh, int comps, double scale) {
    GridFn g(mesh, comps);
    for (int i = 0; i < mesh.points; ++i)
      for (int c = 0; c < comps; ++c) g.at(i, c) = scale * normal();
    return g;
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace plap
