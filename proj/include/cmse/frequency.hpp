#pragma once

#include <functional>
#include <vector>

namespace cmse {

/// Thermal (Matsubara) frequency grid. xis[n] = 2*pi*n*k_B*T/hbar, ascending,
/// with the n = 0 entry carrying weight 1/2 and all others weight 1.
struct FrequencyGrid {
  double temperature = 0.0;            // K
  std::vector<double> xis;             // rad/s
  std::vector<double> weights;         // dimensionless
};

/// First nonzero Matsubara frequency 2*pi*k_B*T/hbar.
double matsubara_xi1(double temperature);

/// Grid of n_max+1 frequencies at temperature T (> 0).
FrequencyGrid matsubara_frequencies(double temperature, int n_max);

struct MatsubaraOptions {
  double rel_tol = 1e-6;
  int block = 3;         // consecutive terms that must be negligible to stop
  int hard_cap = 2000;   // maximum number of terms before giving up
};

struct MatsubaraResult {
  double value = 0.0;    // k_B T * primed sum, J
  int n_max_used = 0;
};

/// k_B T * primed sum of `summand` over the thermal grid, truncated when the
/// last `block` consecutive terms contribute less than rel_tol of the running
/// total. Throws ConvergenceError (carrying the partial sum) at the hard cap.
MatsubaraResult matsubara_sum(const std::function<double(double)>& summand,
                              double temperature,
                              const MatsubaraOptions& opts = {});

struct ZeroTOptions {
  double rel_tol = 1e-6;
  int max_windows = 40;  // log-spaced windows on each side of xi_ref
};

/// (hbar / 2 pi) * integral of `integrand` over xi in (0, inf), evaluated on
/// a logarithmic grid centered at xi_ref (callers pass c/d for a gap d).
double zero_temperature_integral(const std::function<double(double)>& integrand,
                                 double xi_ref, const ZeroTOptions& opts = {});

/// hbar c / (k_B T).
double thermal_wavelength(double temperature);

}  // namespace cmse
