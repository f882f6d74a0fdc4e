#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "support/helpers.hpp"
#include "sysrisk/levy.hpp"

using namespace sysrisk;

TEST_CASE("laplace exponents") {
  CHECK(laplace_exponent(LinearDrift{0.4}, 1.2) == doctest::Approx(-0.48).epsilon(1e-14));
  CHECK(laplace_exponent(LinearDrift{0.4}, 0.0) == 0.0);
  CHECK(laplace_exponent(BrownianDrift{0.4, 0.3}, 1.2) ==
        doctest::Approx(-0.4152).epsilon(1e-14));
  CHECK(laplace_exponent(BrownianDrift{0.4, 0.0}, 1.2) == doctest::Approx(-0.48).epsilon(1e-14));
  CHECK_THROWS_AS(laplace_exponent(LinearDrift{0.0}, 1.0), std::domain_error);
  CHECK_THROWS_AS(laplace_exponent(BrownianDrift{0.4, -0.1}, 1.0), std::domain_error);
}

TEST_CASE("alpha_star search") {
  auto lin = find_alpha_star(LinearDrift{0.4}, 1.2);
  REQUIRE(lin.has_value());
  CHECK(*lin == doctest::Approx(2.2));
  CHECK(laplace_exponent(LinearDrift{0.4}, *lin) < 0.0);

  auto flat = find_alpha_star(BrownianDrift{0.4, 0.0}, 1.2);
  REQUIRE(flat.has_value());
  CHECK(laplace_exponent(BrownianDrift{0.4, 0.0}, *flat) < 0.0);

  auto bm = find_alpha_star(BrownianDrift{0.4, 0.3}, 1.2);
  REQUIRE(bm.has_value());
  CHECK(*bm == doctest::Approx(5.044444444444444).epsilon(1e-12));
  CHECK(*bm > 1.2);
  CHECK(laplace_exponent(BrownianDrift{0.4, 0.3}, *bm) < 0.0);

  // the diffusion term dominates: no admissible exponent
  CHECK_FALSE(find_alpha_star(BrownianDrift{0.1, 1.0}, 1.2).has_value());
}

TEST_CASE("deterministic discount paths use closed forms") {
  RngStream rng(0, 0);
  std::vector<double> times{0.25, 0.5, 1.0};
  DiscountPath lin(LinearDrift{0.4}, times, 1.0, rng);
  CHECK(lin.factor(0) == doctest::Approx(std::exp(-0.1)).epsilon(1e-15));
  CHECK(lin.factor(1) == doctest::Approx(std::exp(-0.2)).epsilon(1e-15));
  CHECK(lin.factor(2) == doctest::Approx(std::exp(-0.4)).epsilon(1e-15));
  CHECK(lin.premium_integral() == doctest::Approx(0.8241998849109018).epsilon(1e-14));

  // sigma == 0 must route to the same closed form, not the grid integrator
  RngStream rng2(0, 0);
  DiscountPath bm0(BrownianDrift{0.4, 0.0}, times, 1.0, rng2);
  CHECK(bm0.factor(1) == lin.factor(1));
  CHECK(bm0.premium_integral() == lin.premium_integral());

  RngStream rng3(0, 0);
  DiscountPath empty(LinearDrift{0.4}, {}, 0.0, rng3);
  CHECK(empty.premium_integral() == 0.0);
}

TEST_CASE("path preconditions") {
  RngStream rng(0, 0);
  std::vector<double> bad_order{0.5, 0.25};
  CHECK_THROWS_AS(DiscountPath(LinearDrift{0.4}, bad_order, 1.0, rng), std::invalid_argument);
  std::vector<double> outside{1.5};
  CHECK_THROWS_AS(DiscountPath(LinearDrift{0.4}, outside, 1.0, rng), std::invalid_argument);
}

TEST_CASE("Brownian path matches its Laplace transform in mean") {
  // E[e^{-R_s}] = e^{s phi(1)}; the forward-sampled value at a grid node is
  // exact, so only Monte Carlo error enters.
  const BrownianDrift bm{0.4, 0.3};
  const double phi1 = laplace_exponent(LevyModel{bm}, 1.0);
  const int n = 20000;
  std::vector<double> fac(n), prem(n);
  std::vector<double> times{1.0};
  for (int i = 0; i < n; ++i) {
    RngStream rng(123, static_cast<std::uint64_t>(i));
    DiscountPath path(LevyModel{bm}, times, 1.0, rng, 32);
    fac[i] = path.factor(0);
    prem[i] = path.premium_integral();
  }
  double se = testutil::sample_sd(fac) / std::sqrt(static_cast<double>(n));
  CHECK(std::abs(testutil::mean(fac) - std::exp(phi1)) < 3.0 * se);

  // premium integral mean: int_0^1 e^{s phi(1)} ds (small trapezoid bias)
  double expected = -std::expm1(phi1) / (-phi1);
  double se_p = testutil::sample_sd(prem) / std::sqrt(static_cast<double>(n));
  CHECK(std::abs(testutil::mean(prem) - expected) < 3.0 * se_p + 1e-4);
}

TEST_CASE("same randomness gives the same Brownian path") {
  std::vector<double> times{0.3, 0.9};
  RngStream a(7, 1), b(7, 1);
  DiscountPath pa(BrownianDrift{0.4, 0.3}, times, 1.0, a);
  DiscountPath pb(BrownianDrift{0.4, 0.3}, times, 1.0, b);
  CHECK(pa.factor(0) == pb.factor(0));
  CHECK(pa.factor(1) == pb.factor(1));
  CHECK(pa.premium_integral() == pb.premium_integral());
  CHECK(pa.factor(0) > 0.0);
  CHECK(pa.factor(1) > 0.0);
}
