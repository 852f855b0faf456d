#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "plap/grid.hpp"
#include "plap/rng.hpp"

using namespace plap;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("make_mesh basics") {
  const Mesh m = make_mesh(1.0, 8);
  CHECK(m.h == Catch::Approx(0.125).epsilon(0));
  for (int i = 0; i < 8; ++i) CHECK(m.node(i) == Catch::Approx(0.125 * i));
  const Mesh m2 = make_mesh(2.0 * kPi, 256);
  CHECK(m2.h == Catch::Approx(2.0 * kPi / 256));
  CHECK_THROWS_AS(make_mesh(0.0, 16), std::domain_error);
  CHECK_THROWS_AS(make_mesh(1.0, 7), std::domain_error);
}

TEST_CASE("diff: constants, analytic derivative, wrap") {
  const Mesh m = make_mesh(2.0 * kPi, 256);
  const GridFn c = GridFn::constant(m, 3.5);
  CHECK(linf_norm(diff(c)) == 0.0);

  const GridFn s = GridFn::sample(m, [](double t) { return std::sin(t); });
  const GridFn d = diff(s);
  double worst = 0.0;
  for (int i = 0; i < m.points; ++i)
    worst = std::max(worst, std::abs(d.at(i, 0) - std::cos(m.node(i) + 0.5 * m.h)));
  CHECK(worst <= 1e-3);  // forward difference is second order at midpoints

  const int M = m.points;
  CHECK(d.at(M - 1, 0) == Catch::Approx((s.at(0, 0) - s.at(M - 1, 0)) / m.h).epsilon(0));
}

TEST_CASE("lp_norm examples") {
  const Mesh m = make_mesh(2.0, 64);
  const GridFn one = GridFn::constant(m, 1.0);
  for (double p : {1.5, 2.0, 3.0})
    CHECK(lp_norm(one, p) == Catch::Approx(std::pow(2.0, 1.0 / p)).margin(1e-12));
  CHECK(lp_norm(GridFn(m, 1), 2.0) == 0.0);
  CHECK_THROWS_AS(lp_norm(one, 1.0), std::domain_error);

  const Mesh m2 = make_mesh(2.0 * kPi, 256);
  const GridFn s = GridFn::sample(m2, [](double t) { return std::sin(t); });
  CHECK(lp_norm(s, 2.0) == Catch::Approx(std::sqrt(kPi)).margin(1e-3));
}

TEST_CASE("w1p_norm examples") {
  const Mesh m = make_mesh(1.0, 64);
  const GridFn one = GridFn::constant(m, 1.0);
  CHECK(w1p_norm(one, 3.0) == Catch::Approx(1.0).margin(1e-12));
  CHECK(w1p_norm(GridFn(m, 1), 2.0) == 0.0);

  const Mesh m2 = make_mesh(2.0 * kPi, 512);
  const GridFn s = GridFn::sample(m2, [](double t) { return std::sin(t); });
  CHECK(w1p_norm(s, 2.0) == Catch::Approx(std::sqrt(2.0 * kPi)).margin(2e-3));
}

TEST_CASE("mean_zero_project") {
  const Mesh m = make_mesh(2.0 * kPi, 128);
  auto [mean5, v5] = mean_zero_project(GridFn::constant(m, 5.0));
  CHECK(mean5[0] == Catch::Approx(5.0).margin(1e-14));
  CHECK(linf_norm(v5) <= 1e-14);

  const GridFn s = GridFn::sample(m, [](double t) { return std::sin(t); });
  auto [means, vs] = mean_zero_project(s);
  CHECK(std::abs(means[0]) <= 1e-14);

  const GridFn c = GridFn::sample(m, [](double t) { return 2.0 + std::cos(t); });
  auto [meanc, vc] = mean_zero_project(c);
  CHECK(meanc[0] == Catch::Approx(2.0).margin(1e-12));
  double worst = 0.0;
  for (int i = 0; i < m.points; ++i)
    worst = std::max(worst, std::abs(vc.at(i, 0) - std::cos(m.node(i))));
  CHECK(worst <= 1e-12);

  // idempotent and linear
  auto [mean2, v2] = mean_zero_project(vc);
  CHECK(std::abs(mean2[0]) <= 1e-12);
}

TEST_CASE("fourier_project members, orthogonality, idempotence") {
  const Mesh m = make_mesh(2.0 * kPi, 128);
  const double w = 1.0;
  const GridFn s2 = GridFn::sample(m, [w](double t) { return std::sin(2.0 * w * t); });

  GridFn proj = fourier_project(s2, {2});
  GridFn d0 = proj - s2;
  CHECK(linf_norm(d0) <= 1e-10);

  CHECK(linf_norm(fourier_project(s2, {1})) <= 1e-10);

  const GridFn mix = GridFn::sample(
      m, [w](double t) { return 1.0 + std::sin(w * t) + std::cos(3.0 * w * t); });
  const GridFn want = GridFn::sample(m, [w](double t) { return 1.0 + std::sin(w * t); });
  GridFn got = fourier_project(mix, {0, 1});
  GridFn err = got - want;
  CHECK(linf_norm(err) <= 1e-10);

  // idempotent, self-adjoint in the discrete inner product
  GridFn twice = fourier_project(got, {0, 1});
  GridFn diff2 = twice - got;
  CHECK(linf_norm(diff2) <= 1e-12);
  Rng rng(7);
  const GridFn a = rng.noise(m, 1, 1.0), b = rng.noise(m, 1, 1.0);
  const GridFn Pa = fourier_project(a, {0, 1, 4}), Pb = fourier_project(b, {0, 1, 4});
  CHECK(l2h_inner(Pa, b) == Catch::Approx(l2h_inner(a, Pb)).margin(1e-10));

  CHECK_THROWS_AS(fourier_project(s2, {64}), std::invalid_argument);
}

TEST_CASE("norm homogeneity and triangle inequality on random samples") {
  const Mesh m = make_mesh(1.0, 32);
  Rng rng(99);
  for (int k = 0; k < 1000; ++k) {
    const GridFn a = rng.noise(m, 2, 1.0);
    const GridFn b = rng.noise(m, 2, 1.0);
    const double al = rng.uniform(-3.0, 3.0);
    const double p = 1.0 + rng.uniform(0.1, 3.0);
    GridFn sa = a;
    sa *= al;
    CHECK(lp_norm(sa, p) == Catch::Approx(std::abs(al) * lp_norm(a, p)).margin(1e-10));
    CHECK(lp_norm(a + b, p) <= lp_norm(a, p) + lp_norm(b, p) + 1e-10);
  }
}

TEST_CASE("discrete Poincare-Wirtinger constant at p=2") {
  const Mesh m = make_mesh(2.0 * kPi, 4096);
  for (int k : {1, 2, 3, 5}) {
    const GridFn v = fourier_mode(m, k, false);
    const double ratio = lp_norm(v, 2.0) / lp_norm(diff(v), 2.0);
    CHECK(ratio <= 1.0 / k + 1e-6);
  }
  // lowest mode attains the constant 1
  const GridFn v1 = fourier_mode(m, 1, true);
  CHECK(lp_norm(v1, 2.0) / lp_norm(diff(v1), 2.0) == Catch::Approx(1.0).margin(1e-6));
}

TEST_CASE("mesh mismatch rejected") {
  const Mesh a = make_mesh(1.0, 32), b = make_mesh(1.0, 64);
  GridFn fa(a, 1), fb(b, 1);
  CHECK_THROWS_AS(fa += fb, std::invalid_argument);
}
