#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "support/helpers.hpp"
#include "sysrisk/frank.hpp"

using namespace sysrisk;

TEST_CASE("generator inverse") {
  CHECK(frank_generator_inverse(0.0, 3.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(frank_generator_inverse(1.0, 3.0) ==
        doctest::Approx(0.1433706892501038).epsilon(1e-13));
  // monotone decreasing to 0
  double prev = 1.0;
  for (double s : {0.5, 1.0, 2.0, 5.0, 20.0, 100.0}) {
    double v = frank_generator_inverse(s, 3.0);
    CHECK(v < prev);
    CHECK(v > 0.0);
    prev = v;
  }
  // large theta stays finite near s = 0 (the log1p/expm1 branch split)
  double near_one = frank_generator_inverse(1e-12, 40.0);
  CHECK(near_one > 0.0);
  CHECK(near_one <= 1.0);
  CHECK_THROWS_AS(frank_generator_inverse(-0.1, 3.0), std::domain_error);
}

TEST_CASE("cdf identities") {
  FrankCopula c1{3.0, 1};
  std::vector<double> u{0.37};
  CHECK(c1.cdf(u) == doctest::Approx(0.37).epsilon(1e-12));

  FrankCopula c2{3.0, 2};
  std::vector<double> mid{0.5, 0.5};
  CHECK(c2.cdf(mid) == doctest::Approx(0.3360886991409358).epsilon(1e-13));
  std::vector<double> uv{0.3, 0.7};
  CHECK(c2.cdf(uv) == doctest::Approx(0.26472541140565176).epsilon(1e-13));
  // grounded and margin-consistent
  std::vector<double> zero{0.0, 0.9};
  CHECK(c2.cdf(zero) == 0.0);
  std::vector<double> margin{0.42, 1.0};
  CHECK(c2.cdf(margin) == doctest::Approx(0.42).epsilon(1e-12));

  // positive dependence: C(u,v) >= uv for theta > 0
  for (double u1 : {0.1, 0.4, 0.8})
    for (double v1 : {0.2, 0.6, 0.9}) {
      std::vector<double> p{u1, v1};
      CHECK(c2.cdf(p) >= u1 * v1 - 1e-12);
    }

  std::vector<double> bad{1.2, 0.5};
  CHECK_THROWS_AS(c2.cdf(bad), std::domain_error);
  std::vector<double> wrong{0.5};
  CHECK_THROWS_AS(c2.cdf(wrong), std::domain_error);
  CHECK_THROWS_AS((FrankCopula{-1.0, 2}).cdf(uv), std::domain_error);
}

TEST_CASE("sampler determinism and range") {
  FrankCopula c{3.0, 4};
  RngStream a(21, 3), b(21, 3);
  auto ua = c.sample(a);
  auto ub = c.sample(b);
  REQUIRE(ua.size() == 4);
  CHECK(ua == ub);
  for (double u : ua) {
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("sampler margins are uniform and dependence matches the cdf") {
  const int n = 20000;
  FrankCopula c{3.0, 2};
  std::vector<double> u1(n), u2(n);
  int joint = 0;
  for (int i = 0; i < n; ++i) {
    RngStream rng(31, static_cast<std::uint64_t>(i));
    auto u = c.sample(rng);
    u1[i] = u[0];
    u2[i] = u[1];
    if (u[0] <= 0.3 && u[1] <= 0.7) ++joint;
  }
  double crit = 1.63 / std::sqrt(static_cast<double>(n));  // 1% KS level
  CHECK(testutil::ks_uniform(u1) < crit);
  CHECK(testutil::ks_uniform(u2) < crit);

  // P(U <= 0.3, V <= 0.7) = C(0.3, 0.7)
  double p = 0.26472541140565176;
  double se = std::sqrt(p * (1.0 - p) / n);
  CHECK(std::abs(joint / static_cast<double>(n) - p) < 3.0 * se);
}

TEST_CASE("Spearman rho brackets the dependence strength") {
  const int n = 20000;
  auto rho_at = [&](double theta, std::uint64_t seed) {
    FrankCopula c{theta, 2};
    std::vector<double> u1(n), u2(n);
    for (int i = 0; i < n; ++i) {
      RngStream rng(seed, static_cast<std::uint64_t>(i));
      auto u = c.sample(rng);
      u1[i] = u[0];
      u2[i] = u[1];
    }
    return testutil::spearman(u1, u2);
  };
  // quadrature value for theta = 5 is 0.6434871080559885
  CHECK(std::abs(rho_at(5.0, 41) - 0.6434871080559885) < 0.025);
  // theta -> 0 approaches independence
  CHECK(std::abs(rho_at(0.01, 43)) < 0.025);
}

TEST_CASE("extreme dependence stays inside the unit cube") {
  // 1 - e^{-theta} rounds to 1.0 for theta >= 38; both the sampler and the
  // cdf must survive that regime.
  FrankCopula c{100.0, 3};
  RngStream rng(17, 0);
  for (int i = 0; i < 200; ++i) {
    auto u = c.sample(rng);
    for (double x : u) {
      CHECK(x > 0.0);
      CHECK(x < 1.0);
    }
    // near-comonotone: coordinates move together
    CHECK(std::abs(u[0] - u[1]) < 0.25);
  }
  std::vector<double> ones{1.0, 1.0, 1.0};
  CHECK(c.cdf(ones) == 1.0);
  std::vector<double> mid{0.5, 0.5, 0.5};
  double v = c.cdf(mid);
  CHECK(v > 0.4);
  CHECK(v < 0.5);
}
