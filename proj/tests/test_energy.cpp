#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "plap/energy.hpp"
#include "plap/rng.hpp"

using namespace plap;
namespace {
constexpr double kPi = std::numbers::pi;
auto g_one = [](double) { return 1.0; };
}  // namespace

TEST_CASE("energy of constants in the base variant") {
  const Mesh m = make_mesh(2.0, 64);
  const ProblemSpec spec = ProblemSpec::base(3.0, g_one, 1.0);
  const PotentialModel j0 = zero_potential(1);
  const double xi = 1.7;
  const GridFn x = GridFn::constant(m, xi);
  CHECK(energy(spec, j0, x) ==
        Catch::Approx(2.0 / 3.0 * std::pow(std::abs(xi), 3.0)).margin(1e-12));
}

TEST_CASE("eigen variant vanishes at zero for thm2") {
  const Mesh m = make_mesh(1.0, 64);
  const ProblemSpec spec = ProblemSpec::eigen(3.0, g_one, 1.0, 17.0);
  const PotentialModel model = thm2_example(2.0, 3.0, 1);
  CHECK(std::abs(energy(spec, model, GridFn(m, 1))) <= 1e-12);
}

TEST_CASE("resonant quadratic form vanishes on the resonant mode") {
  const Mesh m = make_mesh(2.0 * kPi, 256);
  const ProblemSpec spec = ProblemSpec::resonant(1);
  const PotentialModel j0 = zero_potential(1);
  const GridFn s = fourier_mode(m, 1, false);
  CHECK(std::abs(energy(spec, j0, s)) <= 1e-10);
}

TEST_CASE("gradient matches the classical operator on a smooth example") {
  const Mesh m = make_mesh(2.0 * kPi, 256);
  const ProblemSpec spec = ProblemSpec::base(2.0, g_one, 1.0);
  const PotentialModel j0 = zero_potential(1);
  const GridFn s = GridFn::sample(m, [](double t) { return std::sin(t); });
  const GridFn r = gradient_selection(spec, j0, s);
  double worst = 0.0;
  for (int i = 0; i < m.points; ++i)
    worst = std::max(worst, std::abs(r.at(i, 0) - 2.0 * std::sin(m.node(i))));
  CHECK(worst <= 5e-3);
}

TEST_CASE("abs selection at zero gives the zero gradient") {
  const Mesh m = make_mesh(2.0 * kPi, 64);
  const ProblemSpec spec = ProblemSpec::scalar(2.0);
  const PotentialModel a = abs_model();
  const GridFn z(m, 1);
  CHECK(linf_norm(gradient_selection(spec, a, z)) == 0.0);
  CHECK(residual_weak(spec, a, z) == 0.0);
}

TEST_CASE("finite difference check across variants and potentials") {
  Rng rng(4242);
  const Mesh base_mesh = make_mesh(2.0 * kPi, 48);
  struct Case {
    ProblemSpec spec;
    PotentialModel model;
    Mesh mesh;
  };
  auto g_cos = [](double t) { return 1.5 + 0.5 * std::cos(t); };
  std::vector<Case> cases;
  cases.push_back({ProblemSpec::base(2.0, g_cos, 1.0), quartic(2), base_mesh});
  cases.push_back({ProblemSpec::base(3.0, g_one, 1.0), thm1_example(4.0, 3.0, 1), base_mesh});
  cases.push_back({ProblemSpec::eigen(3.0, g_one, 1.0, 5.0), thm2_example(2.0, 3.0, 1), base_mesh});
  cases.push_back({ProblemSpec::scalar(1.5), abs_model(), base_mesh});
  cases.push_back({ProblemSpec::resonant(1, [](double t) { return std::sin(t); }),
                   prop8_example(), base_mesh});
  {
    auto g2b = [](double t) { return 2.0 + std::cos(kPi * t / 1.0); };  // 2b-periodic, b=1
    cases.push_back({ProblemSpec::window(2.0, g2b, 1.0, 2), quartic(1),
                     make_mesh(4.0, 128, -2.0)});
  }

  for (auto& c : cases) {
    for (int trial = 0; trial < 25; ++trial) {
      GridFn x = rng.noise(c.mesh, c.model.dim, 0.8);
      // keep nodes away from the kink loci so the energy is differentiable
      for (int i = 0; i < x.points(); ++i) {
        int guard = 0;
        while (c.model.smooth_distance(x.row(i)) < 2e-3 && ++guard < 50) {
          for (int cc = 0; cc < x.comps(); ++cc) x.at(i, cc) += 0.01;
        }
      }
      const GridFn r = gradient_selection(c.spec, c.model, x);
      const GridFn v = rng.noise(c.mesh, c.model.dim, 1.0);
      const double eps = 2e-6;
      GridFn xp = x, xm = x;
      xp.add_scaled(eps, v);
      xm.add_scaled(-eps, v);
      const double fd =
          (energy(c.spec, c.model, xp) - energy(c.spec, c.model, xm)) / (2.0 * eps);
      const double ip = l2h_inner(r, v);
      CHECK(std::abs(fd - ip) <= 1e-5 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST_CASE("weak residual: zero at an inclusion point, positive off it") {
  const Mesh m = make_mesh(2.0 * kPi, 128);
  const ProblemSpec spec = ProblemSpec::base(2.0, g_one, 1.0);
  const PotentialModel m1 = thm1_example(3.0, 2.0, 1);
  CHECK(residual_weak(spec, m1, GridFn(m, 1)) == 0.0);  // 0 is in the unit ball

  const PotentialModel j0 = zero_potential(1);
  const GridFn s = GridFn::sample(m, [](double t) { return std::sin(t); });
  CHECK(residual_weak(spec, j0, s) > 0.1);
}

TEST_CASE("strong residual at the trivial inclusion point") {
  const Mesh m = make_mesh(1.0, 64);
  const ProblemSpec spec = ProblemSpec::base(2.0, g_one, 1.0);
  const PotentialModel m1 = thm1_example(3.0, 2.0, 1);
  const StrongResidual r = residual_strong(spec, m1, GridFn(m, 1));
  CHECK(r.inclusion_dist == 0.0);
  CHECK(r.bc_primal == 0.0);
}

TEST_CASE("mountain pass geometry is observable for the quartic") {
  const Mesh m = make_mesh(2.0 * kPi, 64);
  const ProblemSpec spec = ProblemSpec::base(2.0, g_one, 1.0);
  const PotentialModel q = quartic(1);
  // positive on a small sphere: constants of small norm
  const GridFn small = GridFn::constant(m, 0.05);
  CHECK(energy(spec, q, small) > 0.0);
  // and negative far out along a fixed direction
  const GridFn far = GridFn::constant(m, 3.0);
  CHECK(energy(spec, q, far) < 0.0);
}

TEST_CASE("eigen coercivity signature for a sub-p potential") {
  const Mesh m = make_mesh(1.0, 64);
  const ProblemSpec spec = ProblemSpec::eigen(3.0, g_one, 1.0, 64.0);
  const PotentialModel model = thm2_example(2.0, 3.0, 1);
  Rng rng(5);
  const GridFn dir = rng.noise(m, 1, 1.0);
  double prev = -1e300;
  for (double s : {1e2, 1e3, 1e4}) {
    GridFn x = dir;
    x *= s / linf_norm(dir);
    const double E = energy(spec, model, x);
    CHECK(E > prev);
    prev = E;
  }
  CHECK(prev > 0.0);
}

TEST_CASE("scaling identity r^mu j <= j(rx) for the superlinear example") {
  Rng rng(6);
  const PotentialModel m1 = thm1_example(3.0, 2.0, 1);
  for (int k = 0; k < 200; ++k) {
    const double s = rng.uniform(1.0, 5.0);   // |x| >= M = 1
    const double r = rng.uniform(1.0, 4.0);
    const std::vector<double> x{s};
    const std::vector<double> rx{r * s};
    CHECK(std::pow(r, 3.0) * eval_j(m1, 0.0, x) <= eval_j(m1, 0.0, rx) + 1e-9);
  }
}

TEST_CASE("spec validation rejects bad coefficients") {
  const Mesh m = make_mesh(1.0, 32);
  const PotentialModel j0 = zero_potential(1);
  ProblemSpec bad = ProblemSpec::base(2.0, [](double) { return -1.0; }, 1.0);
  CHECK_THROWS_AS(energy(bad, j0, GridFn(m, 1)), std::domain_error);
  ProblemSpec nonper = ProblemSpec::base(2.0, [](double t) { return 2.0 + t; }, 1.0);
  CHECK_THROWS_AS(energy(nonper, j0, GridFn(m, 1)), std::domain_error);
}
