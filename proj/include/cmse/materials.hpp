#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cmse {

enum class EpsModel {
  vacuum,
  constant,
  drude,
  drude_lorentz,
  tabulated,
  perfect_conductor_proxy,
};

struct Oscillator {
  double strength = 0.0;  // dimensionless f_j
  double omega = 0.0;     // resonance, rad/s
  double gamma = 0.0;     // width, rad/s
};

/// Two-column table of (xi, eps(i xi)), ascending in xi.
struct MaterialTable {
  std::vector<double> xi;   // rad/s
  std::vector<double> eps;  // dimensionless
};

/// Dispersive material model evaluated at imaginary frequency. All shipped
/// models are passive: eps(i xi) is real and >= 1 for xi >= 0, monotonically
/// non-increasing for Drude / Drude-Lorentz.
struct Material {
  std::string name = "vacuum";
  EpsModel eps_model = EpsModel::vacuum;
  double eps_static = 1.0;     // constant model / eps_infinity offset
  double omega_p = 0.0;        // Drude plasma frequency, rad/s
  double gamma = 0.0;          // Drude relaxation, rad/s
  std::vector<Oscillator> oscillators;
  MaterialTable table;         // tabulated model only

  // mu(i xi): constant only in v1 (non-unity values allowed).
  double mu_constant = 1.0;

  bool has_drude_term() const {
    return (eps_model == EpsModel::drude ||
            eps_model == EpsModel::drude_lorentz) &&
           omega_p > 0.0;
  }
};

/// eps(i xi). xi = 0 returns the static limit; for models with a Drude term
/// that limit is +infinity (callers decide how to treat the n = 0 term).
double permittivity(const Material& mat, double xi);

/// mu(i xi).
double permeability(const Material& mat, double xi);

/// Parse the two-column whitespace-separated table format ('#' comments) and
/// validate it as a passive tabulated material.
Material load_material_table(const std::string& path);
Material material_table_from_rows(const std::string& name,
                                  MaterialTable table);

/// Built-in materials addressable by name (gold, silicon_doped,
/// silicon_intrinsic, vacuum, perfect_conductor).
Material builtin_material(const std::string& name);
std::vector<std::string> builtin_material_names();

}  // namespace cmse
