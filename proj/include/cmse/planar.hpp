#pragma once

#include <Eigen/Dense>
#include <functional>

#include "cmse/coefficients.hpp"
#include "cmse/materials.hpp"

namespace cmse {

enum class Polarization { te, tm };

/// Convention for the n = 0 TE reflection of conducting plates. The Drude
/// convention sends it to zero; the plasma-like convention keeps the plasma
/// screening length kappa(0) = omega_p/c of Drude-type materials.
enum class StaticLimit { drude, plasma_te };

struct PlanarOptions {
  Material ambient = builtin_material("vacuum");
  CoefficientChoice choice = CoefficientChoice::c1();
  StaticLimit static_limit = StaticLimit::drude;
  double k_rel_tol = 1e-7;          // transverse wavevector quadrature
  double sum_rel_tol = 1e-6;        // Matsubara / zero-T frequency quadrature
  int matsubara_cap = 100000;
  bool mirror_reflection = false;   // force |r| = 1 (ideal-mirror oracle)
  double zero_xi_proxy_factor = 1e-4;  // n = 0 proxy for the order expansion
};

struct FresnelPair {
  double r_te = 0.0;
  double r_tm = 0.0;
};

/// Half-space reflection amplitudes at imaginary frequency. xi = 0 applies
/// the static-limit rules for the chosen convention.
FresnelPair fresnel_reflection(const Material& mat, const Material& ambient,
                               double xi, double k_perp,
                               StaticLimit static_limit = StaticLimit::drude);

/// Exact plate-plate interaction energy per area (J/m^2). temperature = 0
/// switches the primed Matsubara sum to the frequency integral.
double lifshitz_energy(const Material& mat1, const Material& mat2, double gap,
                       double temperature, const PlanarOptions& opts = {});

/// Plane-wave-basis surface scattering operators for one (xi, k_perp,
/// polarization) channel of the two-plate system. Each block is the 2x2
/// matrix acting on the channel's (electric, magnetic) current amplitudes;
/// body 1 is the expansion body by convention.
struct ChannelOperators {
  Eigen::Matrix2d k11, k12, k21, k22;
};

ChannelOperators specular_channel_operators(Polarization pol,
                                            const Material& mat1,
                                            const Material& mat2, double gap,
                                            double xi, double k_perp,
                                            const PlanarOptions& opts = {});

/// Per-channel interaction integrand: log det of the round-trip operator,
/// equal to log(1 - r1*r2*exp(-2*kappa_perp*gap)) of Lifshitz theory.
double channel_log_det(Polarization pol, const Material& mat1,
                       const Material& mat2, double gap, double xi,
                       double k_perp, const PlanarOptions& opts = {});

/// Table of expansion orders for the plate pair, k-integrated and
/// frequency-summed. terms(k, l) is the order-(k, l) energy contribution per
/// area; their sum over the table converges to `exact`.
struct PlanarMseTable {
  Eigen::MatrixXd terms;   // (k_max+1) x (l_max+1), J/m^2
  double exact = 0.0;      // resummed reference, J/m^2
  double cumulative(int k_max, int l_max) const {
    return terms.topLeftCorner(k_max + 1, l_max + 1).sum();
  }
};

PlanarMseTable planar_mse_table(const Material& mat_expand,
                                const Material& mat_other, double gap,
                                double temperature, int k_max, int l_max,
                                const PlanarOptions& opts = {});

/// Single order of the expansion (expansion body = mat_expand), J/m^2.
double planar_mse_order(int k, int l, const Material& mat_expand,
                        const Material& mat_other, double gap,
                        double temperature, const PlanarOptions& opts = {});

/// Proximity-force estimate for a symmetric wedge of opening wings at angle
/// theta above a plate, per unit edge length (J/m). The gap is measured
/// normal to the plate: E/L = (2 cos(theta)/sin(theta)) * int e_pp(h) dh over
/// h in [gap, gap + wing_len*sin(theta)].
double pfa_wedge_energy(const Material& mat_wedge, const Material& mat_plate,
                        double theta, double wing_len, double gap,
                        double temperature, const PlanarOptions& opts = {});

/// Proximity-force energy for an arbitrary positive gap profile h(x) over
/// [x0, x1], per unit transverse length (J/m).
double pfa_gap_energy(const std::function<double(double)>& gap_of_x, double x0,
                      double x1, const Material& mat1, const Material& mat2,
                      double temperature, const PlanarOptions& opts = {});

}  // namespace cmse
