#include "cmse/integrate.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "cmse/errors.hpp"

namespace cmse {

namespace {

GaussRule compute_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton iteration on P_n, seeded with the Chebyshev approximation.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
  static std::mutex mtx;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
  return it->second;
}

double integrate_gauss(const std::function<double(double)>& f, double a,
                       double b, int order) {
  const GaussRule& rule = gauss_legendre(order);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < order; ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return sum * half;
}

namespace {

double adapt_rec(const std::function<double(double)>& f, double a, double b,
                 double tol_abs, int order, int depth, int max_depth) {
  double coarse = integrate_gauss(f, a, b, order);
  double fine = integrate_gauss(f, a, b, 2 * order);
  if (std::abs(fine - coarse) <= tol_abs || depth >= max_depth) return fine;
  double mid = 0.5 * (a + b);
  return adapt_rec(f, a, mid, 0.5 * tol_abs, order, depth + 1, max_depth) +
         adapt_rec(f, mid, b, 0.5 * tol_abs, order, depth + 1, max_depth);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double rel_tol, double abs_floor,
                          int order, int max_depth) {
  double rough = std::abs(integrate_gauss(f, a, b, order));
  double tol_abs = std::max(rel_tol * rough, abs_floor);
  if (tol_abs == 0.0) tol_abs = 1e-300;
  return adapt_rec(f, a, b, tol_abs, order, 0, max_depth);
}

double integrate_semi_infinite(const std::function<double(double)>& f,
                               double a, double scale, double rel_tol,
                               int max_panels) {
  if (scale <= 0.0) throw DomainError("integrate_semi_infinite: scale must be > 0");
  double total = 0.0;
  double lo = a;
  double width = scale;
  int quiet = 0;  // consecutive negligible panels
  for (int p = 0; p < max_panels; ++p) {
    double hi = lo + width;
    double panel = integrate_adaptive(f, lo, hi, 0.2 * rel_tol,
                                      0.05 * rel_tol * std::abs(total));
    total += panel;
    if (std::abs(panel) <= rel_tol * std::abs(total) || total == 0.0)
      ++quiet;
    else
      quiet = 0;
    if (quiet >= 2) return total;
    lo = hi;
    width *= 1.6;
  }
  throw ConvergenceError("integrate_semi_infinite: tail did not decay", total,
                         max_panels);
}

double integrate_tanh_sinh(const std::function<double(double)>& f, double a,
                           double b, int levels) {
  // x = mid + half*tanh(pi/2 sinh t); nodes clustered doubly-exponentially
  // toward both endpoints.
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  const double tmax = 3.8;
  double h = tmax;
  double sum = 0.0;
  auto eval = [&](double t) {
    double s = std::sinh(t) * (M_PI / 2.0);
    double x = mid + half * std::tanh(s);
    double dx = half * (M_PI / 2.0) * std::cosh(t) / (std::cosh(s) * std::cosh(s));
    if (x <= a || x >= b || dx == 0.0) return 0.0;
    return f(x) * dx;
  };
  sum = h * eval(0.0);
  for (int level = 1; level <= levels; ++level) {
    h *= 0.5;
    double add = 0.0;
    for (double t = h; t < tmax; t += 2.0 * h) add += eval(t) + eval(-t);
    sum = 0.5 * sum + h * add;
  }
  return sum;
}

}  // namespace cmse
