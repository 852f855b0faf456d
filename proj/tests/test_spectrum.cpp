#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "plap/spectrum.hpp"

using namespace plap;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("pi_p closed form") {
  CHECK(pi_p(2.0) == Catch::Approx(kPi).margin(1e-14));
  CHECK(pi_p(4.0) == Catch::Approx(2.0 * std::pow(3.0, 0.25) * (kPi / 4.0) /
                                   std::sin(kPi / 4.0)).margin(1e-12));
  CHECK(pi_p(4.0) == Catch::Approx(2.9236).margin(1e-3));
  for (double p : {1.01, 1.5, 3.0, 10.0, 100.0}) CHECK(std::isfinite(pi_p(p)));
  CHECK_THROWS_AS(pi_p(1.0), std::domain_error);
}

TEST_CASE("eigenvalue formula") {
  CHECK(eigenvalue_formula(0, 2.7, 3.1) == 0.0);
  CHECK(eigenvalue_formula(1, 2.0, 2.0 * kPi) == Catch::Approx(1.0).margin(1e-13));
  CHECK(eigenvalue_formula(3, 2.0, 2.0 * kPi) == Catch::Approx(9.0).margin(1e-12));
}

TEST_CASE("shooting eigenvalues: classical p = 2") {
  const double l1 = shooting_eigenvalue(1, 2.0, 2.0 * kPi);
  CHECK(std::abs(l1 - 1.0) <= 1e-6);
  const double l2 = shooting_eigenvalue(2, 2.0, 2.0 * kPi);
  CHECK(std::abs(l2 - 4.0) / 4.0 <= 1e-6);
}

TEST_CASE("shooting eigenvalue agrees with the ladder at p = 3") {
  const double lam = shooting_eigenvalue(1, 3.0, 1.0);
  const double ref = eigenvalue_formula(1, 3.0, 1.0);
  CHECK(std::abs(lam - ref) / ref <= 1e-6);
}

TEST_CASE("verify_table contents") {
  const SpectrumResult t = verify_table(2.0, 2.0 * kPi, 3);
  REQUIRE(t.rows.size() == 4);
  const double want[] = {0.0, 1.0, 4.0, 9.0};
  for (int n = 0; n <= 3; ++n) {
    CHECK(t.rows[n].lambda_formula == Catch::Approx(want[n]).margin(1e-12));
    CHECK(t.rows[n].rel_err <= 1e-6);
  }
  for (int n = 0; n < 3; ++n)
    CHECK(t.rows[n + 1].lambda_formula > t.rows[n].lambda_formula);
}

TEST_CASE("scaling law in b") {
  for (double b : {0.5, 1.0, 4.0})
    CHECK(eigenvalue_formula(2, 2.5, b) * std::pow(b, 2.5) ==
          Catch::Approx(eigenvalue_formula(2, 2.5, 1.0)).margin(1e-12 *
                                                                eigenvalue_formula(2, 2.5, 1.0)));
}
