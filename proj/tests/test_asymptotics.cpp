#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "support/helpers.hpp"
#include "sysrisk/asymptotics.hpp"

using namespace sysrisk;

TEST_CASE("aggregate tail on the reference portfolio") {
  ModelConfig config = testutil::benchmark_config();
  CHECK(tail_asymptotic(config, 50.0, 1.0) ==
        doctest::Approx(0.06796416505067149).epsilon(1e-13));
  CHECK(tail_asymptotic(config, 500.0, 1.0) ==
        doctest::Approx(0.0046238402710801685).epsilon(1e-13));
  CHECK(tail_asymptotic(config, 5000.0, 1.0) ==
        doctest::Approx(0.0002940349604659757).epsilon(1e-13));
  CHECK(tail_asymptotic(config, 50000.0, 1.0) ==
        doctest::Approx(1.8566921000076607e-05).epsilon(1e-13));
}

TEST_CASE("per-line tails sum to the aggregate") {
  ModelConfig config = testutil::benchmark_config();
  CHECK(line_tail_asymptotic(config, 0, 5000.0, 1.0) ==
        doctest::Approx(0.0001332997866127977).epsilon(1e-13));
  CHECK(line_tail_asymptotic(config, 1, 5000.0, 1.0) ==
        doctest::Approx(0.000160735173853178).epsilon(1e-13));
  for (double x : {50.0, 500.0, 5000.0}) {
    double total = line_tail_asymptotic(config, 0, x, 1.0) + line_tail_asymptotic(config, 1, x, 1.0);
    CHECK(total == doctest::Approx(tail_asymptotic(config, x, 1.0)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(line_tail_asymptotic(config, 2, 50.0, 1.0), std::domain_error);
}

TEST_CASE("factorized and direct tail forms agree asymptotically") {
  ModelConfig config = testutil::benchmark_config();
  WeightReport w = total_weight(config, 1.0);
  double x = 1e9;
  double factorized = w.total * tail(config.reference_tail(), x);
  CHECK(tail_asymptotic(config, x, 1.0) == doctest::Approx(factorized).epsilon(1e-7));
}

TEST_CASE("VaR asymptotic") {
  ModelConfig config = testutil::benchmark_config();
  CHECK(var_asymptotic(config, 0.99, 1.0) ==
        doctest::Approx(259.1150495988175).epsilon(1e-13));
  // equivalently L^{1/alpha} F^{-1}(q)
  WeightReport w = total_weight(config, 1.0);
  double direct = std::pow(w.total, 1.0 / 1.2) * quantile(config.reference_tail(), 0.995);
  CHECK(var_asymptotic(config, 0.995, 1.0) == doctest::Approx(direct).epsilon(1e-14));
}

TEST_CASE("SES and MES asymptotics on the reference portfolio") {
  ModelConfig config = testutil::benchmark_config();
  CHECK(ses_asymptotic(config, 0, 0.99, 1.0) ==
        doctest::Approx(644.0492477715507).epsilon(1e-12));
  CHECK(ses_asymptotic(config, 1, 0.99, 1.0) ==
        doctest::Approx(764.2502155273478).epsilon(1e-12));
  CHECK(mes_asymptotic(config, 0, 0.99, 1.0) ==
        doctest::Approx(704.8079737562189).epsilon(1e-12));
  CHECK(mes_asymptotic(config, 1, 0.99, 1.0) ==
        doctest::Approx(849.8823238366864).epsilon(1e-12));
  CHECK(ses_asymptotic(config, 0, 0.995, 1.0) ==
        doctest::Approx(1158.6520804612014).epsilon(1e-12));
  CHECK(ses_asymptotic(config, 1, 0.995, 1.0) ==
        doctest::Approx(1374.8950181644757).epsilon(1e-12));
  CHECK(mes_asymptotic(config, 0, 0.995, 1.0) ==
        doctest::Approx(1267.9577345115554).epsilon(1e-12));
  CHECK(mes_asymptotic(config, 1, 0.995, 1.0) ==
        doctest::Approx(1528.9481760405135).epsilon(1e-12));
}

TEST_CASE("shape factors h_ses / h_mes") {
  ModelConfig config = testutil::benchmark_config();
  WeightReport w = total_weight(config, 1.0);
  double alpha = config.alpha();
  double scale = std::pow(w.total, 1.0 / alpha) * quantile(config.reference_tail(), 0.99);
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(ses_asymptotic(config, k, 0.99, 1.0) ==
          doctest::Approx(scale * h_ses(w.shares[k], alpha)).epsilon(1e-12));
    CHECK(mes_asymptotic(config, k, 0.99, 1.0) ==
          doctest::Approx(scale * h_mes(w.shares[k], alpha)).epsilon(1e-12));
  }
  CHECK(h_ses(0.0, 1.2) == 0.0);
  CHECK(h_mes(0.0, 1.2) == 0.0);
  CHECK(h_ses(1.0, 1.2) == doctest::Approx(1.0 / 0.2).epsilon(1e-12));
  CHECK(h_mes(1.0, 1.2) == doctest::Approx(1.2 / 0.2).epsilon(1e-12));
  CHECK_THROWS_AS(h_ses(0.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(h_mes(1.5, 1.2), std::domain_error);
}

TEST_CASE("MES dominates SES and both scale with the quantile") {
  ModelConfig config = testutil::benchmark_config();
  for (std::size_t k = 0; k < 2; ++k)
    for (double q : {0.99, 0.999, 0.9999})
      CHECK(mes_asymptotic(config, k, q, 1.0) > ses_asymptotic(config, k, q, 1.0));

  // SES(q) / F^{-1}(q) is level-free
  double r1 = ses_asymptotic(config, 0, 0.99, 1.0) / quantile(config.reference_tail(), 0.99);
  double r2 = ses_asymptotic(config, 0, 0.9995, 1.0) / quantile(config.reference_tail(), 0.9995);
  CHECK(r1 == doctest::Approx(r2).epsilon(1e-12));
}

TEST_CASE("hypothesis violations throw") {
  ModelConfig config = testutil::benchmark_config();
  for (auto& line : config.lines) {
    line.x_claims.alpha = 1.0;
    line.y_claims.alpha = 1.0;
  }
  // tail and VaR still make sense at alpha = 1
  CHECK(tail_asymptotic(config, 50.0, 1.0) > 0.0);
  CHECK_THROWS_AS(ses_asymptotic(config, 0, 0.99, 1.0), std::domain_error);
  CHECK_THROWS_AS(mes_asymptotic(config, 0, 0.99, 1.0), std::domain_error);

  ModelConfig bad = testutil::benchmark_config();
  bad.copula_theta = -1.0;
  CHECK_THROWS_AS(tail_asymptotic(bad, 50.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(tail_asymptotic(testutil::benchmark_config(), -5.0, 1.0), std::domain_error);
}

TEST_CASE("report bundles the individual evaluations") {
  ModelConfig config = testutil::benchmark_config();
  AsymptoticReport report = evaluate_report(config, 500.0, 0.99, 1.0);
  CHECK(report.tail_at_x == doctest::Approx(tail_asymptotic(config, 500.0, 1.0)));
  CHECK(report.var_q == doctest::Approx(var_asymptotic(config, 0.99, 1.0)));
  REQUIRE(report.ses.size() == 2);
  CHECK(report.ses[1] == doctest::Approx(ses_asymptotic(config, 1, 0.99, 1.0)));
  CHECK(report.mes[0] == doctest::Approx(mes_asymptotic(config, 0, 0.99, 1.0)));
  CHECK(report.weights.total == doctest::Approx(3.5180806771761706));
}
