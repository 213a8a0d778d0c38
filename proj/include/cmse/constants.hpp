#pragma once

namespace cmse {

/// Fundamental constants (CODATA 2018, SI). Fixed at compile time; these are
/// deliberately not configurable at run time.
struct PhysicalConstants {
  double hbar;  // J s
  double c;     // m/s
  double k_B;   // J/K
};

inline constexpr PhysicalConstants constants{1.054571817e-34, 299792458.0,
                                             1.380649e-23};

inline constexpr double elementary_charge = 1.602176634e-19;  // C

/// Photon energy in eV -> angular frequency in rad/s.
inline constexpr double ev_to_rad_per_s(double ev) {
  return ev * elementary_charge / constants.hbar;
}

}  // namespace cmse
