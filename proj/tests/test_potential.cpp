#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "plap/potential.hpp"
#include "plap/rng.hpp"

using namespace plap;

namespace {
std::vector<double> vec(std::initializer_list<double> v) { return {v}; }
}  // namespace

TEST_CASE("thm1_example branch agreement and constant") {
  const double mu = 3.0;
  const PotentialModel m = thm1_example(mu, 2.0, 2);
  // both branches at |x| = 1 give -1 = 1/mu + c with c = -(mu+1)/mu
  const std::vector<double> x = vec({1.0, 0.0});
  CHECK(eval_j(m, 0.0, x) == Catch::Approx(-1.0).margin(1e-12));
  const double c = -(mu + 1.0) / mu;
  CHECK(1.0 / mu - 0.0 + c == Catch::Approx(-1.0).margin(1e-15));
  // continuity across the interface
  for (double s : {1.0 - 1e-9, 1.0 + 1e-9}) {
    const std::vector<double> xx = vec({s, 0.0});
    CHECK(eval_j(m, 0.0, xx) == Catch::Approx(-1.0).margin(1e-8));
  }
}

TEST_CASE("thm2_example branch agreement") {
  const PotentialModel m = thm2_example(2.0, 3.0, 1);
  for (double s : {1.0 - 1e-10, 1.0, 1.0 + 1e-10}) {
    const std::vector<double> x = vec({s});
    CHECK(eval_j(m, 0.0, x) == Catch::Approx(-1.0 / 3.0).margin(1e-9));
  }
  CHECK_THROWS_AS(thm2_example(3.0, 2.0), std::domain_error);
}

TEST_CASE("prop8_example at zero") {
  const PotentialModel m = prop8_example();
  const std::vector<double> x = vec({0.0});
  CHECK(eval_j(m, 0.0, x) == Catch::Approx(1.0).margin(1e-15));
}

TEST_CASE("select_subgrad: smooth branch, kink midpoints") {
  const PotentialModel m1 = thm1_example(3.0, 2.0, 2);
  const std::vector<double> x = vec({0.3, 0.4});  // |x| = 0.5 < 1
  const std::vector<double> u = select_subgrad(m1, 0.0, x);
  CHECK(u[0] == Catch::Approx(-0.6).margin(1e-12));
  CHECK(u[1] == Catch::Approx(-0.8).margin(1e-12));

  const std::vector<double> zero = vec({0.0, 0.0});
  const std::vector<double> u0 = select_subgrad(m1, 0.0, zero);
  CHECK(row_norm(u0) == 0.0);  // midpoint of the unit ball

  const PotentialModel m2 = thm2_example(2.0, 3.0, 1);
  const std::vector<double> one = vec({1.0});
  const std::vector<double> u1 = select_subgrad(m2, 0.0, one);
  CHECK(u1[0] == Catch::Approx(-0.5 * std::sin(1.0)).margin(1e-12));
}

TEST_CASE("j0_estimate: smooth value, Clarke value at a kink, zero direction") {
  const PotentialModel q = quartic(2);
  const std::vector<double> x = vec({1.0, 0.0});
  const std::vector<double> d = vec({1.0, 0.0});
  CHECK(j0_estimate(q, 0.0, x, d) == Catch::Approx(1.0).margin(1e-3));

  const PotentialModel m1 = thm1_example(3.0, 2.0, 1);
  const std::vector<double> z = vec({0.0});
  const std::vector<double> dir = vec({1.0});
  CHECK(j0_estimate(m1, 0.0, z, dir) == Catch::Approx(1.0).margin(2e-3));

  const std::vector<double> nodir = vec({0.0});
  CHECK(j0_estimate(q, 0.0, x, nodir) == 0.0);
}

TEST_CASE("subgrad_distance against exact sets") {
  const PotentialModel m1 = thm1_example(3.0, 2.0, 2);
  const std::vector<double> zero = vec({0.0, 0.0});
  CHECK(subgrad_distance(m1, 0.0, zero, vec({0.5, 0.0})) == Catch::Approx(0.0).margin(1e-14));
  CHECK(subgrad_distance(m1, 0.0, zero, vec({2.0, 0.0})) == Catch::Approx(1.0).margin(1e-12));

  const PotentialModel q = quartic(2);
  const std::vector<double> x = vec({1.0, 1.0});
  const std::vector<double> g = select_subgrad(q, 0.0, x);
  CHECK(subgrad_distance(q, 0.0, x, g) == Catch::Approx(0.0).margin(1e-14));
}

TEST_CASE("builtin registry and preconditions") {
  CHECK_THROWS_AS(thm1_example(2.0, 3.0), std::domain_error);  // needs mu > p
  const PotentialModel m2 = builtin("thm2_example", {{"r", 2.0}, {"p", 3.0}});
  CHECK(m2.growth.r == 2.0);
  CHECK_THROWS_AS(builtin("nope"), std::domain_error);
  const PotentialModel a = builtin("abs");
  CHECK(a.dim == 1);
}

TEST_CASE("gradient consistency vs central differences away from kinks") {
  Rng rng(42);
  const std::vector<PotentialModel> models = {
      thm1_example(3.0, 2.0, 2), thm2_example(2.0, 3.0, 2), quartic(2),
      prop8_example(),           abs_model(),
      linear_forced([](double t) { return std::sin(t); }, 1.0)};
  for (const auto& m : models) {
    int tested = 0;
    for (int k = 0; k < 1000 && tested < 250; ++k) {
      std::vector<double> x(static_cast<std::size_t>(m.dim));
      for (auto& v : x) v = rng.uniform(-2.0, 2.0);
      if (m.smooth_distance(x) < 1e-3) continue;
      ++tested;
      const double t = rng.uniform(0.0, 6.28);
      const std::vector<double> u = select_subgrad(m, t, x);
      for (int c = 0; c < m.dim; ++c) {
        const double step = 1e-6;
        std::vector<double> xp = x, xm = x;
        xp[c] += step;
        xm[c] -= step;
        if (m.smooth_distance(xp) < 5e-4 || m.smooth_distance(xm) < 5e-4) continue;
        const double fd = (eval_j(m, t, xp) - eval_j(m, t, xm)) / (2.0 * step);
        const double scale = std::max(1.0, std::abs(u[c]));
        CHECK(std::abs(fd - u[c]) / scale <= 1e-5);
      }
    }
    CHECK(tested > 100);
  }
}

TEST_CASE("selection lies in the descriptor set") {
  Rng rng(43);
  const std::vector<PotentialModel> models = {thm1_example(3.0, 2.0, 2),
                                              thm2_example(2.0, 3.0, 2), abs_model()};
  for (const auto& m : models) {
    for (int k = 0; k < 300; ++k) {
      std::vector<double> x(static_cast<std::size_t>(m.dim));
      for (auto& v : x) v = rng.uniform(-2.0, 2.0);
      const std::vector<double> u = select_subgrad(m, 0.0, x);
      CHECK(m.set_descriptor(0.0, x).distance(u) <= 1e-12);
    }
  }
}

TEST_CASE("growth bound holds out to large radii") {
  Rng rng(44);
  const std::vector<PotentialModel> models = {
      thm1_example(3.0, 2.0, 2), thm2_example(2.0, 3.0, 1), quartic(1), abs_model()};
  for (const auto& m : models) {
    for (int k = 0; k < 400; ++k) {
      const double r = std::pow(10.0, rng.uniform(-3.0, 3.0));
      std::vector<double> x(static_cast<std::size_t>(m.dim));
      double n = 0.0;
      for (auto& v : x) {
        v = rng.normal();
        n += v * v;
      }
      n = std::sqrt(n);
      for (auto& v : x) v *= r / n;
      const std::vector<double> u = select_subgrad(m, 0.0, x);
      const double bound = m.growth.a1 + m.growth.c1 * std::pow(r, m.growth.r - 1.0);
      CHECK(row_norm(u) <= bound * (1.0 + 1e-12) + 1e-9);
    }
  }
}
