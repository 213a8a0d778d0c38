#include "cmse/planar.hpp"

#include <cmath>

#include "cmse/constants.hpp"
#include "cmse/errors.hpp"
#include "cmse/frequency.hpp"
#include "cmse/integrate.hpp"

namespace cmse {

namespace {

struct MediumAtXi {
  double eps, mu, kappa2;
  double p(double k) const { return std::sqrt(k * k + kappa2); }
};

MediumAtXi medium_at(const Material& m, double xi) {
  const double eps = permittivity(m, xi);
  const double mu = permeability(m, xi);
  const double w = xi / constants.c;
  return {eps, mu, eps * mu * w * w};
}

}  // namespace

FresnelPair fresnel_reflection(const Material& mat, const Material& ambient,
                               double xi, double k_perp,
                               StaticLimit static_limit) {
  if (xi < 0.0 || k_perp < 0.0)
    throw DomainError("fresnel_reflection: xi and k_perp must be >= 0");
  FresnelPair r;
  if (xi == 0.0) {
    const double eps_s = permittivity(mat, 0.0);
    const double eps_a = permittivity(ambient, 0.0);
    const double mu_s = permeability(mat, 0.0);
    const double mu_a = permeability(ambient, 0.0);
    r.r_tm = std::isinf(eps_s) ? 1.0 : (eps_s - eps_a) / (eps_s + eps_a);
    r.r_te = (mu_s - mu_a) / (mu_s + mu_a);
    if (static_limit == StaticLimit::plasma_te && mat.has_drude_term() &&
        k_perp > 0.0) {
      // plasma-like screening: keep kappa(0) = omega_p sqrt(mu)/c
      const double kp = std::sqrt(k_perp * k_perp +
                                  mu_s * mat.omega_p * mat.omega_p /
                                      (constants.c * constants.c));
      r.r_te = (mu_s * k_perp - mu_a * kp) / (mu_s * k_perp + mu_a * kp);
    }
    return r;
  }
  const auto body = medium_at(mat, xi);
  const auto amb = medium_at(ambient, xi);
  const double pb = body.p(k_perp);
  const double pa = amb.p(k_perp);
  r.r_te = (body.mu * pa - amb.mu * pb) / (body.mu * pa + amb.mu * pb);
  r.r_tm = (body.eps * pa - amb.eps * pb) / (body.eps * pa + amb.eps * pb);
  return r;
}

ChannelOperators specular_channel_operators(Polarization pol,
                                            const Material& mat1,
                                            const Material& mat2, double gap,
                                            double xi, double k_perp,
                                            const PlanarOptions& opts) {
  if (xi <= 0.0)
    throw DomainError(
        "specular_channel_operators: xi must be > 0 (n = 0 uses the static "
        "rules or a small-xi proxy)");
  if (gap <= 0.0) throw DomainError("specular_channel_operators: gap <= 0");

  const double w = xi / constants.c;
  const auto amb = medium_at(opts.ambient, xi);
  const auto b1 = medium_at(mat1, xi);
  const auto b2 = medium_at(mat2, xi);
  const double p = amb.p(k_perp);
  const double tau = std::exp(-p * gap);

  const CoeffEntries e1 = opts.choice.resolve(b1.eps, b1.mu, amb.eps, amb.mu);
  const CoeffEntries e2 = opts.choice.resolve(b2.eps, b2.mu, amb.eps, amb.mu);

  auto intra = [&](const MediumAtXi& b, const CoeffEntries& e, double& a_out,
                   double& b_out) {
    const double pb = b.p(k_perp);
    const double ce = e.ci_e + e.ce_e;
    const double ch = e.ci_h + e.ce_h;
    if (pol == Polarization::tm) {
      a_out = -(w / ch) * (e.ci_h * b.eps / pb - e.ce_h * amb.eps / p);
      b_out = -(1.0 / (w * ce)) * (e.ci_e * pb / b.eps - e.ce_e * p / amb.eps);
    } else {
      a_out = (1.0 / (w * ch)) * (e.ci_h * pb / b.mu - e.ce_h * p / amb.mu);
      b_out = (w / ce) * (e.ci_e * b.mu / pb - e.ce_e * amb.mu / p);
    }
  };

  double a1, bb1, a2, bb2;
  intra(b1, e1, a1, bb1);
  intra(b2, e2, a2, bb2);

  const double gE1 = e1.ce_e / (e1.ci_e + e1.ce_e);
  const double gH1 = e1.ce_h / (e1.ci_h + e1.ce_h);
  const double gE2 = e2.ce_e / (e2.ci_e + e2.ce_e);
  const double gH2 = e2.ce_h / (e2.ci_h + e2.ce_h);

  ChannelOperators ops;
  ops.k11 << 0.0, a1, bb1, 0.0;
  ops.k22 << 0.0, -a2, -bb2, 0.0;
  if (pol == Polarization::tm) {
    const double s = w * amb.eps / p;
    ops.k12 << -gH1, gH1 * s, gE1 / s, -gE1;
    ops.k21 << -gH2, -gH2 * s, -gE2 / s, -gE2;
  } else {
    const double s = p / (w * amb.mu);
    ops.k12 << -gH1, -gH1 * s, -gE1 / s, -gE1;
    ops.k21 << -gH2, gH2 * s, gE2 / s, -gE2;
  }
  ops.k12 *= tau;
  ops.k21 *= tau;
  return ops;
}

double channel_log_det(Polarization pol, const Material& mat1,
                       const Material& mat2, double gap, double xi,
                       double k_perp, const PlanarOptions& opts) {
  if (xi == 0.0) {
    // static limit: Lifshitz form with the n = 0 reflection rules
    const double r1 = (pol == Polarization::tm)
                          ? fresnel_reflection(mat1, opts.ambient, 0.0, k_perp,
                                               opts.static_limit)
                                .r_tm
                          : fresnel_reflection(mat1, opts.ambient, 0.0, k_perp,
                                               opts.static_limit)
                                .r_te;
    const double r2 = (pol == Polarization::tm)
                          ? fresnel_reflection(mat2, opts.ambient, 0.0, k_perp,
                                               opts.static_limit)
                                .r_tm
                          : fresnel_reflection(mat2, opts.ambient, 0.0, k_perp,
                                               opts.static_limit)
                                .r_te;
    return std::log1p(-r1 * r2 * std::exp(-2.0 * k_perp * gap));
  }
  const auto ops = specular_channel_operators(pol, mat1, mat2, gap, xi, k_perp,
                                              opts);
  const Eigen::Matrix2d a =
      (Eigen::Matrix2d::Identity() - ops.k11).inverse() * ops.k12 *
      (Eigen::Matrix2d::Identity() - ops.k22).inverse() * ops.k21;
  return std::log((Eigen::Matrix2d::Identity() - a).determinant());
}

namespace {

// (1/2pi) * int_0^inf k dk of the two-polarization channel integrand, via the
// substitution u = 2*p*gap (p dp = u du / 4 gap^2).
double k_integral(const Material& mat1, const Material& mat2, double gap,
                  double xi, const PlanarOptions& opts) {
  const double kappa_e =
      (xi == 0.0) ? 0.0 : std::sqrt(medium_at(opts.ambient, xi).kappa2);
  const double a = 2.0 * kappa_e * gap;
  auto integrand = [&](double u) {
    const double halfu = u / (2.0 * gap);
    const double k2 = halfu * halfu - kappa_e * kappa_e;
    const double k = k2 > 0.0 ? std::sqrt(k2) : 0.0;
    double sum;
    if (opts.mirror_reflection) {
      sum = 2.0 * std::log1p(-std::exp(-u));
    } else {
      sum = channel_log_det(Polarization::te, mat1, mat2, gap, xi, k, opts) +
            channel_log_det(Polarization::tm, mat1, mat2, gap, xi, k, opts);
    }
    return u * sum;
  };
  const double val =
      integrate_semi_infinite(integrand, a, 2.0, opts.k_rel_tol);
  return val / (2.0 * M_PI * 4.0 * gap * gap);
}

}  // namespace

double lifshitz_energy(const Material& mat1, const Material& mat2, double gap,
                       double temperature, const PlanarOptions& opts) {
  if (gap <= 0.0) throw DomainError("lifshitz_energy: gap must be > 0");
  if (temperature < 0.0)
    throw DomainError("lifshitz_energy: temperature must be >= 0");
  auto integrand = [&](double xi) {
    return k_integral(mat1, mat2, gap, xi, opts);
  };
  if (temperature == 0.0)
    return zero_temperature_integral(integrand, constants.c / gap,
                                     {.rel_tol = opts.sum_rel_tol});
  return matsubara_sum(integrand, temperature,
                       {.rel_tol = opts.sum_rel_tol,
                        .hard_cap = opts.matsubara_cap})
      .value;
}

namespace {

// Expansion-order table plus the resummed value at one (xi, k) point, summed
// over polarizations. terms(k, l) = -(1/(k+1)) Tr of the order-(k, l) piece.
struct ChannelTable {
  Eigen::MatrixXd terms;
  double exact = 0.0;
};

ChannelTable channel_mse_table(const Material& mat_expand,
                               const Material& mat_other, double gap,
                               double xi, double k_perp, int k_max, int l_max,
                               const PlanarOptions& opts) {
  ChannelTable out;
  out.terms = Eigen::MatrixXd::Zero(k_max + 1, l_max + 1);
  for (Polarization pol : {Polarization::te, Polarization::tm}) {
    const auto ops = specular_channel_operators(pol, mat_expand, mat_other,
                                                gap, xi, k_perp, opts);
    const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
    const Eigen::Matrix2d w = ops.k12 * (id - ops.k22).inverse() * ops.k21;
    const Eigen::Matrix2d a = (id - ops.k11).inverse() * w;
    out.exact += std::log((id - a).determinant());

    // B_j = K11^j W; T_s(l) = sum_j B_j T_{s-1}(l - j)
    std::vector<Eigen::Matrix2d> b(l_max + 1);
    Eigen::Matrix2d pw = w;
    for (int j = 0; j <= l_max; ++j) {
      b[j] = pw;
      if (j < l_max) pw = ops.k11 * pw;
    }
    std::vector<Eigen::Matrix2d> t = b;  // s = 1
    for (int kk = 0; kk <= k_max; ++kk) {
      const int s = kk + 1;
      if (kk > 0) {
        std::vector<Eigen::Matrix2d> next(l_max + 1, Eigen::Matrix2d::Zero());
        for (int l = 0; l <= l_max; ++l)
          for (int j = 0; j <= l; ++j) next[l] += b[j] * t[l - j];
        t = std::move(next);
      }
      for (int l = 0; l <= l_max; ++l)
        out.terms(kk, l) -= t[l].trace() / static_cast<double>(s);
    }
  }
  return out;
}

ChannelTable k_integrated_table(const Material& mat_expand,
                                const Material& mat_other, double gap,
                                double xi, int k_max, int l_max,
                                const PlanarOptions& opts) {
  const double kappa_e = std::sqrt(medium_at(opts.ambient, xi).kappa2);
  const double a = 2.0 * kappa_e * gap;
  ChannelTable total;
  total.terms = Eigen::MatrixXd::Zero(k_max + 1, l_max + 1);

  const GaussRule& rule = gauss_legendre(24);
  double lo = a, width = 2.5;
  int quiet = 0;
  for (int panel = 0; panel < 60 && quiet < 2; ++panel) {
    ChannelTable ptab;
    ptab.terms = Eigen::MatrixXd::Zero(k_max + 1, l_max + 1);
    const double mid = lo + width / 2, half = width / 2;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double u = mid + half * rule.nodes[i];
      const double halfu = u / (2.0 * gap);
      const double k2 = halfu * halfu - kappa_e * kappa_e;
      const double k = k2 > 0.0 ? std::sqrt(k2) : 0.0;
      auto tab = channel_mse_table(mat_expand, mat_other, gap, xi, k, k_max,
                                   l_max, opts);
      const double wgt = rule.weights[i] * half * u;
      ptab.terms += wgt * tab.terms;
      ptab.exact += wgt * tab.exact;
    }
    total.terms += ptab.terms;
    total.exact += ptab.exact;
    const double pnorm = ptab.terms.cwiseAbs().maxCoeff() + std::abs(ptab.exact);
    const double tnorm =
        total.terms.cwiseAbs().maxCoeff() + std::abs(total.exact);
    quiet = (pnorm <= opts.k_rel_tol * tnorm || tnorm == 0.0) ? quiet + 1 : 0;
    lo += width;
    width *= 1.6;
  }
  const double measure = 1.0 / (2.0 * M_PI * 4.0 * gap * gap);
  total.terms *= measure;
  total.exact *= measure;
  return total;
}

}  // namespace

PlanarMseTable planar_mse_table(const Material& mat_expand,
                                const Material& mat_other, double gap,
                                double temperature, int k_max, int l_max,
                                const PlanarOptions& opts) {
  if (gap <= 0.0) throw DomainError("planar_mse_table: gap must be > 0");
  if (k_max < 0 || l_max < 0)
    throw DomainError("planar_mse_table: orders must be >= 0");
  PlanarMseTable out;
  out.terms = Eigen::MatrixXd::Zero(k_max + 1, l_max + 1);

  auto at_xi = [&](double xi) {
    return k_integrated_table(mat_expand, mat_other, gap, xi, k_max, l_max,
                              opts);
  };

  if (temperature > 0.0) {
    const double xi1 = matsubara_xi1(temperature);
    const double kT = constants.k_B * temperature;
    double block_abs = 0.0;
    int in_block = 0;
    bool done = false;
    for (int n = 0; n < opts.matsubara_cap && !done; ++n) {
      const double xi_eff = (n == 0) ? opts.zero_xi_proxy_factor * xi1 : xi1 * n;
      const double weight = (n == 0) ? 0.5 : 1.0;
      auto tab = at_xi(xi_eff);
      out.terms += kT * weight * tab.terms;
      out.exact += kT * weight * tab.exact;
      block_abs += std::abs(tab.exact) + tab.terms.cwiseAbs().maxCoeff();
      if (++in_block == 3) {
        const double tot =
            std::abs(out.exact) + out.terms.cwiseAbs().maxCoeff();
        if (kT * block_abs <= opts.sum_rel_tol * tot) done = true;
        block_abs = 0.0;
        in_block = 0;
      }
    }
    if (!done)
      throw ConvergenceError("planar_mse_table: Matsubara sum did not converge",
                             out.exact, opts.matsubara_cap);
    return out;
  }

  // T = 0: hbar/(2 pi) * int dxi on a log grid, windows added outward until
  // both tails are negligible.
  const double xi_ref = constants.c / gap;
  const GaussRule& rule = gauss_legendre(24);
  auto window = [&](double t0, double t1, PlanarMseTable& acc) {
    const double mid = 0.5 * (t0 + t1), half = 0.5 * (t1 - t0);
    double wexact = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double xi = xi_ref * std::exp(mid + half * rule.nodes[i]);
      auto tab = at_xi(xi);
      const double wgt = rule.weights[i] * half * xi;
      acc.terms += wgt * tab.terms;
      acc.exact += wgt * tab.exact;
      wexact += std::abs(wgt * tab.exact);
    }
    return wexact;
  };
  const double width = 2.0;
  window(-width / 2, width / 2, out);
  double hi = width / 2, lo = -width / 2;
  for (int side = 0; side < 2; ++side) {
    int quiet = 0;
    for (int wdx = 0; wdx < 40 && quiet < 2; ++wdx) {
      double contrib = (side == 0) ? window(hi, hi + width, out)
                                   : window(lo - width, lo, out);
      if (side == 0)
        hi += width;
      else
        lo -= width;
      quiet = (contrib <= opts.sum_rel_tol * std::abs(out.exact)) ? quiet + 1
                                                                  : 0;
    }
  }
  const double scale = constants.hbar / (2.0 * M_PI);
  out.terms *= scale;
  out.exact *= scale;
  return out;
}

double planar_mse_order(int k, int l, const Material& mat_expand,
                        const Material& mat_other, double gap,
                        double temperature, const PlanarOptions& opts) {
  auto table = planar_mse_table(mat_expand, mat_other, gap, temperature, k, l,
                                opts);
  return table.terms(k, l);
}

double pfa_wedge_energy(const Material& mat_wedge, const Material& mat_plate,
                        double theta, double wing_len, double gap,
                        double temperature, const PlanarOptions& opts) {
  if (theta <= 0.0 || theta >= M_PI / 2.0)
    throw DomainError("pfa_wedge_energy: theta must lie in (0, pi/2)");
  if (wing_len <= 0.0 || gap <= 0.0)
    throw DomainError("pfa_wedge_energy: lengths must be > 0");
  auto epp = [&](double h) {
    return lifshitz_energy(mat_wedge, mat_plate, h, temperature, opts);
  };
  const double h1 = gap + wing_len * std::sin(theta);
  const double integral = integrate_adaptive(epp, gap, h1, 1e-5, 0.0, 12, 16);
  return 2.0 * std::cos(theta) / std::sin(theta) * integral;
}

double pfa_gap_energy(const std::function<double(double)>& gap_of_x, double x0,
                      double x1, const Material& mat1, const Material& mat2,
                      double temperature, const PlanarOptions& opts) {
  auto integrand = [&](double x) {
    const double h = gap_of_x(x);
    if (h <= 0.0) throw DomainError("pfa_gap_energy: gap must be positive");
    return lifshitz_energy(mat1, mat2, h, temperature, opts);
  };
  return integrate_adaptive(integrand, x0, x1, 1e-5, 0.0, 12, 16);
}

}  // namespace cmse
