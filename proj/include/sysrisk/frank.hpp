#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sysrisk/rng.hpp"

namespace sysrisk {

// Frank copula with dependence parameter theta > 0 (positive dependence;
// theta -> 0+ approaches independence).
struct FrankCopula {
  double theta;
  std::size_t dim;

  // C(u) = -(1/theta) log(1 + prod_i (e^{-theta u_i} - 1) / (e^{-theta} - 1)^{dim-1}),
  // evaluated in the log domain.
  double cdf(std::span<const double> u) const;

  // Marshall-Olkin frailty sampling: V ~ Logarithmic(1 - e^{-theta}),
  // U_i = psi(E_i / V) with E_i iid Exp(1) and psi the generator inverse.
  // Consumes dim + (V draws) variates from rng; output entries lie in (0, 1).
  void sample(RngStream& rng, std::span<double> out) const;
  std::vector<double> sample(RngStream& rng) const;
};

// Generator inverse psi(s) = -(1/theta) log(1 - (1 - e^{-theta}) e^{-s}).
double frank_generator_inverse(double s, double theta);

}  // namespace sysrisk
