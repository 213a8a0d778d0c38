#include <cmath>

#include "cmse/constants.hpp"
#include "cmse/errors.hpp"
#include "cmse/frequency.hpp"
#include "cmse/materials.hpp"
#include "cmse/planar.hpp"
#include "doctest.h"

using namespace cmse;

namespace {
const Material kGold = builtin_material("gold");
const Material kSi = builtin_material("silicon_doped");
const Material kVac = builtin_material("vacuum");
const Material kPec = builtin_material("perfect_conductor");
}  // namespace

TEST_CASE("fresnel reflection basics") {
  auto r = fresnel_reflection(kPec, kVac, 1e14, 1e6);
  CHECK(std::abs(r.r_te) > 0.999);
  CHECK(std::abs(r.r_tm) > 0.999);
  CHECK(std::abs(r.r_te) <= 1.0);
  CHECK(std::abs(r.r_tm) <= 1.0);

  auto zero = fresnel_reflection(kVac, kVac, 1e15, 1e6);
  CHECK(zero.r_te == 0.0);
  CHECK(zero.r_tm == 0.0);

  // textbook formula recomputed directly
  const double xi = 1e15, k = 1e6;
  const double eps = permittivity(kGold, xi);
  const double w = xi / constants.c;
  const double pa = std::sqrt(k * k + w * w);
  const double pb = std::sqrt(k * k + eps * w * w);
  auto g = fresnel_reflection(kGold, kVac, xi, k);
  CHECK(g.r_te == doctest::Approx((pa - pb) / (pa + pb)).epsilon(1e-12));
  CHECK(g.r_tm ==
        doctest::Approx((eps * pa - pb) / (eps * pa + pb)).epsilon(1e-12));
  CHECK(std::abs(g.r_te) <= 1.0);
  CHECK(std::abs(g.r_tm) <= 1.0);
}

TEST_CASE("static limits") {
  auto au = fresnel_reflection(kGold, kVac, 0.0, 1e6, StaticLimit::drude);
  CHECK(au.r_tm == 1.0);
  CHECK(au.r_te == 0.0);
  auto aup = fresnel_reflection(kGold, kVac, 0.0, 1e6, StaticLimit::plasma_te);
  CHECK(aup.r_te < 0.0);  // plasma-like convention keeps a TE response
  auto si0 = fresnel_reflection(builtin_material("silicon_intrinsic"), kVac,
                                0.0, 1e6);
  CHECK(si0.r_tm == doctest::Approx((11.87 - 1) / (11.87 + 1)).epsilon(1e-12));
}

TEST_CASE("channel log-det reproduces the Fresnel round-trip factor") {
  // The decisive consistency check between the surface-operator symbols and
  // Lifshitz theory, per polarization, over a spread of (xi, k) points.
  const double d = 300e-9;
  for (double xi : {5e13, 2.468e14, 1.5e15, 8e15}) {
    for (double k : {1e4, 1e6, 4e6, 2e7}) {
      const double w = xi / constants.c;
      const double p = std::sqrt(k * k + w * w);
      auto r1 = fresnel_reflection(kSi, kVac, xi, k);
      auto r2 = fresnel_reflection(kGold, kVac, xi, k);
      const double tau2 = std::exp(-2.0 * p * d);

      const double te = channel_log_det(Polarization::te, kSi, kGold, d, xi, k);
      const double tm = channel_log_det(Polarization::tm, kSi, kGold, d, xi, k);
      CHECK(te ==
            doctest::Approx(std::log1p(-r1.r_te * r2.r_te * tau2)).epsilon(1e-12));
      CHECK(tm ==
            doctest::Approx(std::log1p(-r1.r_tm * r2.r_tm * tau2)).epsilon(1e-12));
    }
  }
}

TEST_CASE("channel identity holds for magnetic and custom coefficients") {
  Material mag = kVac;
  mag.name = "magnetic_dielectric";
  mag.eps_model = EpsModel::constant;
  mag.eps_static = 4.0;
  mag.mu_constant = 1.8;

  PlanarOptions c2;
  c2.choice = CoefficientChoice::c2();
  const double d = 1e-6, xi = 3e14, k = 2e6;
  const double w = xi / constants.c;
  const double p = std::sqrt(k * k + w * w);
  auto r1 = fresnel_reflection(mag, kVac, xi, k);
  auto r2 = fresnel_reflection(kGold, kVac, xi, k);
  const double tau2 = std::exp(-2.0 * p * d);
  for (auto pol : {Polarization::te, Polarization::tm}) {
    const double rr = (pol == Polarization::te) ? r1.r_te * r2.r_te
                                                : r1.r_tm * r2.r_tm;
    CHECK(channel_log_det(pol, mag, kGold, d, xi, k) ==
          doctest::Approx(std::log1p(-rr * tau2)).epsilon(1e-12));
    CHECK(channel_log_det(pol, mag, kGold, d, xi, k, c2) ==
          doctest::Approx(std::log1p(-rr * tau2)).epsilon(1e-12));
  }
}

TEST_CASE("ideal mirror energy at T = 0") {
  PlanarOptions opts;
  opts.mirror_reflection = true;
  const double d = 1e-6;
  const double expected = -M_PI * M_PI * constants.hbar * constants.c /
                          (720.0 * d * d * d);
  double e = lifshitz_energy(kVac, kVac, d, 0.0, opts);
  CHECK(e == doctest::Approx(expected).epsilon(1e-6));
  CHECK(expected == doctest::Approx(-4.334e-10).epsilon(2e-4));

  double e2 = lifshitz_energy(kVac, kVac, 2 * d, 0.0, opts);
  CHECK(e2 / e == doctest::Approx(1.0 / 8.0).epsilon(1e-6));
}

TEST_CASE("lifshitz energy monotone in separation") {
  double last = -1e300;
  for (int i = 0; i < 10; ++i) {
    double d = 100e-9 * std::pow(10.0, i / 9.0);
    double e = lifshitz_energy(kGold, kSi, d, 300.0);
    CHECK(e < 0.0);
    CHECK(e > last);
    last = e;
  }
}

TEST_CASE("golden regression: Au-Si plates at 100 nm") {
  // locked from the first validated run of this module, one value per
  // n = 0 convention
  double e = lifshitz_energy(kGold, kSi, 100e-9, 300.0);
  CHECK(e == doctest::Approx(-1.5789795878e-07).epsilon(1e-6));

  PlanarOptions plasma;
  plasma.static_limit = StaticLimit::plasma_te;
  double ep = lifshitz_energy(kGold, kSi, 100e-9, 300.0, plasma);
  CHECK(ep == doctest::Approx(-1.5801631915e-07).epsilon(1e-6));
  CHECK(ep < e);  // the extra TE channel only deepens the attraction
}

TEST_CASE("order table resums to the exact energy") {
  const double d = 300e-9;
  auto table = planar_mse_table(kSi, kGold, d, 300.0, 6, 10);
  double exact = lifshitz_energy(kSi, kGold, d, 300.0);
  CHECK(table.exact == doctest::Approx(exact).epsilon(2e-3));
  CHECK(table.cumulative(6, 10) == doctest::Approx(exact).epsilon(2e-3));
  CHECK(table.cumulative(6, 10) == doctest::Approx(table.exact).epsilon(5e-4));
}

TEST_CASE("low orders against the paper bands (surrogate materials)") {
  for (double d : {100e-9, 300e-9, 1000e-9}) {
    auto table = planar_mse_table(kSi, kGold, d, 300.0, 1, 2);
    const double mse00 = table.terms(0, 0);
    const double mse12 = table.cumulative(1, 2);
    CHECK(mse00 / table.exact > 0.60);
    CHECK(mse00 / table.exact < 0.95);
    CHECK(mse12 / table.exact > 0.97);
    CHECK(mse12 / table.exact < 1.03);
  }
}

TEST_CASE("pfa wedge") {
  PlanarOptions mirror;
  mirror.mirror_reflection = true;
  const double d = 1e-6;
  // long wings approach the closed form (cos/sin) pi^2 hbar c / (720 d^2)
  for (double theta : {M_PI / 6, M_PI / 3}) {
    double e = pfa_wedge_energy(kVac, kVac, theta, 60 * d / std::sin(theta), d,
                                0.0, mirror);
    const double closed = -std::cos(theta) / std::sin(theta) * M_PI * M_PI *
                          constants.hbar * constants.c / (720.0 * d * d);
    CHECK(e == doctest::Approx(closed).epsilon(1e-3));
  }
  CHECK_THROWS_AS(pfa_wedge_energy(kVac, kVac, 2.0, 1e-6, d, 0.0, mirror),
                  DomainError);
  CHECK_THROWS_AS(pfa_wedge_energy(kVac, kVac, 0.5, 1e-6, -d, 0.0, mirror),
                  DomainError);
}

TEST_CASE("pfa gap profile reduces to plate-plate in the flat limit") {
  const double d = 1e-6;
  PlanarOptions mirror;
  mirror.mirror_reflection = true;
  double strip = pfa_gap_energy([&](double) { return d; }, 0.0, 10e-6, kVac,
                                kVac, 0.0, mirror);
  double epp = lifshitz_energy(kVac, kVac, d, 0.0, mirror);
  CHECK(strip == doctest::Approx(epp * 10e-6).epsilon(1e-6));
}
