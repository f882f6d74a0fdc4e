#include <cmath>

#include "doctest.h"
#include "support/helpers.hpp"
#include "sysrisk/weights.hpp"

using namespace sysrisk;

TEST_CASE("line weights and shares on the reference portfolio") {
  ModelConfig config = testutil::benchmark_config();
  WeightReport w = total_weight(config, 1.0);
  REQUIRE(w.per_line.size() == 2);
  CHECK(w.per_line[0] == doctest::Approx(1.5948972714569016).epsilon(1e-13));
  CHECK(w.per_line[1] == doctest::Approx(1.9231834057192692).epsilon(1e-13));
  CHECK(w.total == doctest::Approx(3.5180806771761706).epsilon(1e-13));
  CHECK(w.shares[0] == doctest::Approx(0.4533430065444278).epsilon(1e-13));
  CHECK(w.shares[1] == doctest::Approx(0.5466569934555723).epsilon(1e-13));
  CHECK(w.shares[0] + w.shares[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("line_weight composes ratios with exposures") {
  ModelConfig config = testutil::benchmark_config();
  double phi = laplace_exponent(config.discount, config.alpha());
  CHECK(phi == doctest::Approx(-0.48).epsilon(1e-15));
  double l0 = line_weight(config.lines[0], config.reference_tail(), phi, 1.0);
  // a_1 = 1 (reference), b_1 = 2^1.2
  double expected = 0.317680506828216 + 2.2973967099940698 * 0.5559408869493778;
  CHECK(l0 == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("weights scale with intensity and grow with the horizon") {
  ModelConfig config = testutil::benchmark_config();
  WeightReport base = total_weight(config, 1.0);

  ModelConfig doubled = config;
  for (auto& line : doubled.lines) {
    line.x_intensity *= 2.0;
    line.y_intensity *= 2.0;
  }
  WeightReport two = total_weight(doubled, 1.0);
  CHECK(two.total == doctest::Approx(2.0 * base.total).epsilon(1e-13));
  CHECK(two.shares[0] == doctest::Approx(base.shares[0]).epsilon(1e-13));

  CHECK(total_weight(config, 0.5).total < base.total);
  CHECK(total_weight(config, 2.0).total > base.total);
  CHECK(total_weight(config, 0.0).total == 0.0);
}

TEST_CASE("Brownian discounting enters through phi(alpha)") {
  ModelConfig config = testutil::benchmark_config();
  config.discount = BrownianDrift{0.4, 0.3};
  double phi = laplace_exponent(config.discount, 1.2);
  CHECK(phi == doctest::Approx(-0.4152).epsilon(1e-14));
  WeightReport w = total_weight(config, 1.0);
  // recompute directly from the definition
  double unit = -std::expm1(phi) / (-phi);
  double expected = (0.4 + 2.2973967099940698 * 0.7) * unit +
                    (1.626707656796548 * 0.5 + 2.2973967099940698 * 0.7) * unit;
  CHECK(w.total == doctest::Approx(expected).epsilon(1e-12));
}
