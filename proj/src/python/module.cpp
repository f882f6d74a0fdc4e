#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "sysrisk/asymptotics.hpp"
#include "sysrisk/estimators.hpp"
#include "sysrisk/frank.hpp"
#include "sysrisk/simulate.hpp"

namespace py = pybind11;
using namespace sysrisk;

namespace {

LevyModel make_discount(const std::string& kind, double a, double b) {
  if (kind == "linear") return LinearDrift{a};
  if (kind == "brownian") return BrownianDrift{a, b};
  throw std::domain_error("discount kind must be 'linear' or 'brownian'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Discounted multi-line risk model: asymptotics, simulation, estimators";

  py::class_<TailSpec>(m, "TailSpec")
      .def(py::init<double, double>(), py::arg("gamma"), py::arg("alpha"))
      .def_readwrite("gamma", &TailSpec::gamma)
      .def_readwrite("alpha", &TailSpec::alpha)
      .def("__repr__", [](const TailSpec& s) {
        return "TailSpec(gamma=" + std::to_string(s.gamma) + ", alpha=" + std::to_string(s.alpha) + ")";
      });

  m.def("tail", &tail, py::arg("spec"), py::arg("x"));
  m.def("quantile", &quantile, py::arg("spec"), py::arg("q"));
  m.def("equivalence_ratio", &equivalence_ratio, py::arg("spec"), py::arg("reference"));

  py::class_<RngStream>(m, "RngStream")
      .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("seed"), py::arg("stream"))
      .def("uniform01", &RngStream::uniform01)
      .def("exponential", &RngStream::exponential)
      .def("poisson", &RngStream::poisson, py::arg("mean"))
      .def("logarithmic", &RngStream::logarithmic, py::arg("p"));

  py::class_<FrankCopula>(m, "FrankCopula")
      .def(py::init([](double theta, std::size_t dim) { return FrankCopula{theta, dim}; }),
           py::arg("theta"), py::arg("dim"))
      .def_readonly("theta", &FrankCopula::theta)
      .def_readonly("dim", &FrankCopula::dim)
      .def("cdf", [](const FrankCopula& c, const std::vector<double>& u) {
        return c.cdf(std::span<const double>(u));
      }, py::arg("u"))
      .def("sample", [](const FrankCopula& c, RngStream& rng) { return c.sample(rng); },
           py::arg("rng"));

  m.def("laplace_exponent",
        [](const std::string& kind, double a, double b, double arg) {
          return laplace_exponent(make_discount(kind, a, b), arg);
        },
        py::arg("kind"), py::arg("param1"), py::arg("param2"), py::arg("a"));
  m.def("find_alpha_star",
        [](const std::string& kind, double a, double b, double alpha) -> std::optional<double> {
          return find_alpha_star(make_discount(kind, a, b), alpha);
        },
        py::arg("kind"), py::arg("param1"), py::arg("param2"), py::arg("alpha"));

  py::class_<LineSpec>(m, "LineSpec")
      .def_readonly("name", &LineSpec::name)
      .def_readonly("x_claims", &LineSpec::x_claims)
      .def_readonly("y_claims", &LineSpec::y_claims)
      .def_readonly("x_intensity", &LineSpec::x_intensity)
      .def_readonly("y_intensity", &LineSpec::y_intensity)
      .def_readonly("premium_rate", &LineSpec::premium_rate);

  py::class_<ModelConfig>(m, "ModelConfig")
      .def_property_readonly("num_lines", &ModelConfig::num_lines)
      .def_property_readonly("alpha", &ModelConfig::alpha)
      .def_readonly("lines", &ModelConfig::lines)
      .def_readonly("copula_theta", &ModelConfig::copula_theta)
      .def_readonly("horizon", &ModelConfig::horizon)
      .def_readonly("reference_line", &ModelConfig::reference_line)
      .def("digest", &ModelConfig::digest)
      .def("canonical_string", &ModelConfig::canonical_string);

  m.def("load_config", &load_config, py::arg("path"));

  py::class_<ValidationIssue>(m, "ValidationIssue")
      .def_readonly("field", &ValidationIssue::field)
      .def_readonly("message", &ValidationIssue::message);
  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("issues", &ValidationReport::issues)
      .def("ok", &ValidationReport::ok);
  m.def("validate", &validate, py::arg("config"), py::arg("require_ses_mes") = false);

  py::class_<WeightReport>(m, "WeightReport")
      .def_readonly("per_line", &WeightReport::per_line)
      .def_readonly("total", &WeightReport::total)
      .def_readonly("shares", &WeightReport::shares);
  m.def("total_weight", &total_weight, py::arg("config"), py::arg("t"));

  m.def("tail_asymptotic", &tail_asymptotic, py::arg("config"), py::arg("x"), py::arg("t"));
  m.def("line_tail_asymptotic", &line_tail_asymptotic, py::arg("config"), py::arg("line"),
        py::arg("x"), py::arg("t"));
  m.def("var_asymptotic", &var_asymptotic, py::arg("config"), py::arg("q"), py::arg("t"));
  m.def("ses_asymptotic", &ses_asymptotic, py::arg("config"), py::arg("line"), py::arg("q"),
        py::arg("t"));
  m.def("mes_asymptotic", &mes_asymptotic, py::arg("config"), py::arg("line"), py::arg("q"),
        py::arg("t"));
  m.def("h_ses", &h_ses, py::arg("rho"), py::arg("alpha"));
  m.def("h_mes", &h_mes, py::arg("rho"), py::arg("alpha"));

  py::class_<BatchResult>(m, "BatchResult")
      .def_readonly("seed", &BatchResult::seed)
      .def_readonly("config_digest", &BatchResult::config_digest)
      .def_readonly("num_lines", &BatchResult::num_lines)
      .def_readonly("n", &BatchResult::n)
      .def_readonly("horizon", &BatchResult::horizon)
      .def_readonly("d_total", &BatchResult::d_total)
      .def_readonly("s_aggregate", &BatchResult::s_aggregate)
      .def_readonly("claim_count", &BatchResult::claim_count)
      .def("z_column", &BatchResult::z_column, py::arg("line"))
      .def("sample_digest", &BatchResult::sample_digest);
  m.def("run_batch", &run_batch, py::arg("config"), py::arg("n"), py::arg("seed"),
        py::arg("workers") = 0, py::call_guard<py::gil_scoped_release>());
  m.def("save_batch", &save_batch, py::arg("batch"), py::arg("path"));
  m.def("load_batch", &load_batch, py::arg("path"));

  py::class_<EmpiricalEstimate>(m, "EmpiricalEstimate")
      .def_readonly("value", &EmpiricalEstimate::value)
      .def_readonly("std_error", &EmpiricalEstimate::std_error)
      .def_readonly("exceedances", &EmpiricalEstimate::exceedances);

  m.def("empirical_tail",
        [](const std::vector<double>& sample, double threshold) {
          return empirical_tail(std::span<const double>(sample), threshold);
        },
        py::arg("sample"), py::arg("threshold"));
  m.def("empirical_quantile",
        [](const std::vector<double>& sample, double q) {
          return empirical_quantile(std::span<const double>(sample), q);
        },
        py::arg("sample"), py::arg("q"));
  m.def("empirical_ses",
        [](const std::vector<double>& z, const std::vector<double>& d, double q,
           std::size_t resamples, std::uint64_t seed) {
          return empirical_ses(std::span<const double>(z), std::span<const double>(d), q,
                               {resamples, seed});
        },
        py::arg("z"), py::arg("d"), py::arg("q"), py::arg("resamples") = 200,
        py::arg("seed") = 0x0b007);
  m.def("empirical_mes",
        [](const std::vector<double>& z, const std::vector<double>& d, double q,
           std::size_t resamples, std::uint64_t seed) {
          return empirical_mes(std::span<const double>(z), std::span<const double>(d), q,
                               {resamples, seed});
        },
        py::arg("z"), py::arg("d"), py::arg("q"), py::arg("resamples") = 200,
        py::arg("seed") = 0x0b007);

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_RuntimeError);
}
