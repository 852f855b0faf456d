#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "plap/rng.hpp"
#include "plap/solvers.hpp"

using namespace plap;
namespace {
constexpr double kPi = std::numbers::pi;
auto g_one = [](double) { return 1.0; };
}  // namespace

TEST_CASE("minimize: linear forcing against the Fourier solution") {
  const Mesh m = make_mesh(2.0 * kPi, 512);
  const ProblemSpec spec = ProblemSpec::base(2.0, g_one, 1.0);
  const PotentialModel model =
      linear_forced([](double t) { return std::sin(t); }, 1.0);
  SolveOptions opts;
  const CriticalPoint cp = minimize(spec, model, GridFn(m, 1), opts);
  CHECK(cp.residual_weak <= opts.tol_residual);
  double worst = 0.0;
  for (int i = 0; i < m.points; ++i)
    worst = std::max(worst, std::abs(cp.x.at(i, 0) - 0.5 * std::sin(m.node(i))));
  CHECK(worst <= 1e-4);
  CHECK(cp.kind == PointKind::minimizer);
}

TEST_CASE("minimize: trivial problem returns zero") {
  const Mesh m = make_mesh(2.0 * kPi, 64);
  const ProblemSpec spec = ProblemSpec::base(2.0, g_one, 1.0);
  const PotentialModel j0 = zero_potential(1);
  SolveOptions opts;
  Rng rng(3);
  const CriticalPoint cp = minimize(spec, j0, rng.noise(m, 1, 0.5), opts);
  CHECK(linf_norm(cp.x) <= 1e-6);
  CHECK(std::abs(cp.energy) <= 1e-10);
}

TEST_CASE("minimize: eigen variant reaches a negative level for large lambda") {
  const Mesh m = make_mesh(1.0, 128);
  const PotentialModel model = thm2_example(2.0, 3.0, 1);
  const ProblemSpec spec = ProblemSpec::eigen(3.0, g_one, 1.0, 64.0);
  SolveOptions opts;
  GridFn x0 = GridFn::constant(m, 32.0);
  const CriticalPoint cp = minimize(spec, model, x0, opts);
  CHECK(cp.energy < 0.0);
  CHECK(cp.residual_weak <= opts.tol_residual);
}

TEST_CASE("rim_estimate positivity and vanishing limit") {
  const Mesh m = make_mesh(2.0 * kPi, 64);
  const ProblemSpec spec = ProblemSpec::base(2.0, g_one, 1.0);
  SolveOptions opts;
  const PotentialModel q = quartic(1);
  const double xi = rim_estimate(spec, q, m, 0.1, 6, opts);
  CHECK(xi > 0.0);
  const PotentialModel j0 = zero_potential(1);
  CHECK(rim_estimate(spec, j0, m, 0.1, 4, opts) > 0.0);
  CHECK(rim_estimate(spec, q, m, 1e-4, 4, opts) <= rim_estimate(spec, q, m, 0.05, 4, opts));
  CHECK(rim_estimate(spec, q, m, 1e-4, 4, opts) < 1e-4);
}

TEST_CASE("find_far_endpoint doubling and failure") {
  const Mesh m = make_mesh(2.0 * kPi, 64);
  const ProblemSpec spec = ProblemSpec::base(2.0, g_one, 1.0);
  SolveOptions opts;
  const PotentialModel q = quartic(1);
  const FarEndpoint fe = find_far_endpoint(spec, q, GridFn::constant(m, 1.0), opts);
  CHECK(energy(spec, q, fe.e) < -1.0);

  const PotentialModel m1 = thm1_example(3.0, 2.0, 1);
  const FarEndpoint f2 =
      find_far_endpoint(spec, m1, GridFn::constant(m, m1.x_star), opts);
  CHECK(energy(spec, m1, f2.e) < -1.0);

  const PotentialModel j0 = zero_potential(1);
  CHECK_THROWS_AS(find_far_endpoint(spec, j0, GridFn::constant(m, 1.0), opts),
                  std::runtime_error);
}

TEST_CASE("mountain pass on the quartic: level, residuals, monotone path max") {
  const Mesh m = make_mesh(2.0 * kPi, 128);
  const ProblemSpec spec = ProblemSpec::base(2.0, g_one, 1.0);
  const PotentialModel q = quartic(1);
  SolveOptions opts;
  const FarEndpoint fe = find_far_endpoint(spec, q, GridFn::constant(m, 1.0), opts);
  const CriticalPoint cp = mountain_pass(spec, q, fe.e, opts);
  CHECK(cp.kind == PointKind::mountain_pass);
  CHECK(cp.residual_weak <= opts.tol_residual);
  CHECK(linf_norm(cp.x) >= 1e-3);
  REQUIRE(cp.level.has_value());
  CHECK(*cp.level > 0.0);
  CHECK(*cp.level <= kPi / 2.0 + 1e-6);  // the constant solutions sit at b/4
  REQUIRE(cp.rim.has_value());
  CHECK(cp.energy >= cp.rim->xi - 1e-6);
  for (std::size_t k = 0; k + 1 < cp.path_max_history.size(); ++k)
    CHECK(cp.path_max_history[k + 1] <= cp.path_max_history[k] + 1e-12);
  CHECK(cp.residual_strong.inclusion_dist <= 5.0 * m.h);
}

TEST_CASE("mountain pass on the nonsmooth superlinear example") {
  const Mesh m = make_mesh(1.0, 128);
  const ProblemSpec spec = ProblemSpec::base(2.0, g_one, 1.0);
  const PotentialModel m1 = thm1_example(3.0, 2.0, 1);
  SolveOptions opts;
  const FarEndpoint fe =
      find_far_endpoint(spec, m1, GridFn::constant(m, m1.x_star), opts);
  const CriticalPoint cp = mountain_pass(spec, m1, fe.e, opts);
  CHECK(cp.residual_weak <= opts.tol_residual);
  CHECK(linf_norm(cp.x) >= 1e-3);
  CHECK(cp.residual_strong.inclusion_dist <= 5.0 * m.h);
}

TEST_CASE("mountain pass rejects bad geometry") {
  const Mesh m = make_mesh(2.0 * kPi, 64);
  const ProblemSpec spec = ProblemSpec::base(2.0, g_one, 1.0);
  const PotentialModel q = quartic(1);
  SolveOptions opts;
  // endpoint with positive energy above the rim estimate
  CHECK_THROWS_AS(mountain_pass(spec, q, GridFn::constant(m, 0.5), opts),
                  std::invalid_argument);
}

TEST_CASE("saddle search: scalar nonsmooth problem") {
  const Mesh m = make_mesh(2.0 * kPi, 256);
  const ProblemSpec spec = ProblemSpec::scalar(2.0);
  const PotentialModel a = abs_model();
  SolveOptions opts;
  const CriticalPoint cp = saddle_search(spec, a, m, Split::mean_zero(), opts);
  CHECK(cp.kind == PointKind::saddle);
  CHECK(cp.residual_weak <= opts.tol_residual);
  CHECK(cp.residual_strong.inclusion_dist <= 5.0 * m.h);
}

TEST_CASE("saddle search: resonant problem at the first eigenvalue") {
  const Mesh m = make_mesh(2.0 * kPi, 256);
  const ProblemSpec spec = ProblemSpec::resonant(1);
  const PotentialModel a = abs_model();
  SolveOptions opts;
  const CriticalPoint cp = saddle_search(spec, a, m, Split::fourier_up_to(1), opts);
  CHECK(cp.residual_weak <= opts.tol_residual);
}

TEST_CASE("saddle search: flat potential converges to a trivial point") {
  const Mesh m = make_mesh(2.0 * kPi, 64);
  const ProblemSpec spec = ProblemSpec::scalar(2.0);
  const PotentialModel j0 = zero_potential(1);
  SolveOptions opts;
  const CriticalPoint cp = saddle_search(spec, j0, m, Split::mean_zero(), opts);
  CHECK(cp.residual_weak <= opts.tol_residual);
  CHECK(!cp.warnings.empty());  // anticoercivity signature absent for j = 0
}

TEST_CASE("lambda_star_sweep finds a multiplicity window") {
  const Mesh m = make_mesh(1.0, 64);
  const ProblemSpec spec = ProblemSpec::eigen(3.0, g_one, 1.0, 1.0);
  const PotentialModel model = thm2_example(2.0, 3.0, 1);
  SolveOptions opts;
  const SweepResult sw = lambda_star_sweep(spec, model, {1.0, 8.0}, m, opts);
  REQUIRE(sw.rows.size() == 2);
  CHECK(sw.rows[0].lambda == 1.0);
  REQUIRE(sw.lambda_star_empirical.has_value());
  CHECK(*sw.lambda_star_empirical == 8.0);
  const SweepRow& row = sw.rows[1];
  CHECK(row.phi1 < 0.0);
  CHECK(row.phi2 > 0.0);
  CHECK(row.dist_inf >= 1e-3);
  CHECK(row.residual1 <= opts.tol_residual);
  CHECK(row.residual2 <= opts.tol_residual);
}

TEST_CASE("lambda_star_sweep: lambda = 0 stays trivial, empty grid is empty") {
  const Mesh m = make_mesh(1.0, 64);
  const ProblemSpec spec = ProblemSpec::eigen(3.0, g_one, 1.0, 1.0);
  const PotentialModel model = thm2_example(2.0, 3.0, 1);
  SolveOptions opts;
  const SweepResult sw = lambda_star_sweep(spec, model, {0.0}, m, opts);
  REQUIRE(sw.rows.size() == 1);
  CHECK(sw.rows[0].has_min);
  CHECK(!sw.rows[0].has_pass);
  CHECK(std::abs(sw.rows[0].phi1) <= 1e-9);
  CHECK(lambda_star_sweep(spec, model, {}, m, opts).rows.empty());
}

TEST_CASE("determinism: identical seeds give identical iterates") {
  const Mesh m = make_mesh(2.0 * kPi, 64);
  const ProblemSpec spec = ProblemSpec::scalar(2.0);
  const PotentialModel a = abs_model();
  SolveOptions opts;
  const CriticalPoint c1 = saddle_search(spec, a, m, Split::mean_zero(), opts);
  const CriticalPoint c2 = saddle_search(spec, a, m, Split::mean_zero(), opts);
  REQUIRE(c1.x.points() == c2.x.points());
  for (int i = 0; i < c1.x.points(); ++i)
    CHECK(c1.x.at(i, 0) == c2.x.at(i, 0));
}
