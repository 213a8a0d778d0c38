#include "cmse/frequency.hpp"

#include <cmath>

#include "cmse/constants.hpp"
#include "cmse/errors.hpp"
#include "cmse/integrate.hpp"

namespace cmse {

double matsubara_xi1(double temperature) {
  if (temperature <= 0.0)
    throw DomainError("matsubara_xi1: temperature must be > 0");
  return 2.0 * M_PI * constants.k_B * temperature / constants.hbar;
}

FrequencyGrid matsubara_frequencies(double temperature, int n_max) {
  if (temperature <= 0.0)
    throw DomainError(
        "matsubara_frequencies: temperature must be > 0 (use "
        "zero_temperature_integral for T = 0)");
  if (n_max < 0) throw DomainError("matsubara_frequencies: n_max must be >= 0");
  const double xi1 = matsubara_xi1(temperature);
  FrequencyGrid grid;
  grid.temperature = temperature;
  grid.xis.reserve(n_max + 1);
  grid.weights.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    grid.xis.push_back(xi1 * n);
    grid.weights.push_back(n == 0 ? 0.5 : 1.0);
  }
  return grid;
}

MatsubaraResult matsubara_sum(const std::function<double(double)>& summand,
                              double temperature,
                              const MatsubaraOptions& opts) {
  if (temperature <= 0.0)
    throw DomainError("matsubara_sum: temperature must be > 0");
  const double xi1 = matsubara_xi1(temperature);
  const double kT = constants.k_B * temperature;

  double running = 0.0;
  double block_abs = 0.0;
  int in_block = 0;
  for (int n = 0; n < opts.hard_cap; ++n) {
    const double term = (n == 0 ? 0.5 : 1.0) * summand(xi1 * n);
    running += term;
    block_abs += std::abs(term);
    if (++in_block == opts.block) {
      if (block_abs <= opts.rel_tol * std::abs(running))
        return {kT * running, n};
      block_abs = 0.0;
      in_block = 0;
    }
  }
  throw ConvergenceError("matsubara_sum: no convergence within hard cap",
                         kT * running, opts.hard_cap);
}

double zero_temperature_integral(const std::function<double(double)>& integrand,
                                 double xi_ref, const ZeroTOptions& opts) {
  if (xi_ref <= 0.0)
    throw DomainError("zero_temperature_integral: xi_ref must be > 0");
  // xi = xi_ref * e^t turns (0, inf) into the whole t-axis; windows of width 2
  // are added outward from t = 0 until both tails are negligible.
  auto g = [&](double t) {
    const double xi = xi_ref * std::exp(t);
    return integrand(xi) * xi;
  };
  const double width = 2.0;
  double total = integrate_adaptive(g, -width / 2, width / 2, 0.1 * opts.rel_tol);
  bool grow_up = true, grow_down = true;
  double hi = width / 2, lo = -width / 2;
  int quiet_up = 0, quiet_down = 0;
  for (int w = 0; w < opts.max_windows && (grow_up || grow_down); ++w) {
    if (grow_up) {
      double panel = integrate_adaptive(g, hi, hi + width, 0.1 * opts.rel_tol,
                                        0.01 * opts.rel_tol * std::abs(total));
      total += panel;
      hi += width;
      quiet_up = (std::abs(panel) <= opts.rel_tol * std::abs(total) || total == 0.0)
                     ? quiet_up + 1
                     : 0;
      if (quiet_up >= 2) grow_up = false;
    }
    if (grow_down) {
      double panel = integrate_adaptive(g, lo - width, lo, 0.1 * opts.rel_tol,
                                        0.01 * opts.rel_tol * std::abs(total));
      total += panel;
      lo -= width;
      quiet_down = (std::abs(panel) <= opts.rel_tol * std::abs(total) || total == 0.0)
                       ? quiet_down + 1
                       : 0;
      if (quiet_down >= 2) grow_down = false;
    }
  }
  const double value = constants.hbar / (2.0 * M_PI) * total;
  if (grow_up || grow_down)
    throw ConvergenceError("zero_temperature_integral: tails did not decay",
                           value, opts.max_windows);
  return value;
}

double thermal_wavelength(double temperature) {
  if (temperature <= 0.0)
    throw DomainError("thermal_wavelength: temperature must be > 0");
  return constants.hbar * constants.c / (constants.k_B * temperature);
}

}  // namespace cmse
