#pragma once

#include <functional>
#include <vector>

namespace cmse {

/// Gauss-Legendre nodes and weights on [-1, 1]. Computed once per order and
/// cached; thread-safe after first use of a given order.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussRule& gauss_legendre(int order);

/// Fixed-order Gauss-Legendre integral of f over [a, b].
double integrate_gauss(const std::function<double(double)>& f, double a,
                       double b, int order = 24);

/// Adaptive integral over [a, b]: recursive bisection, accepting a panel when
/// GL(order) and GL(2*order) agree to the requested tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double rel_tol, double abs_floor = 0.0,
                          int order = 12, int max_depth = 30);

/// Integral of f over [a, infinity) for integrands decaying on the given
/// scale: geometric panels of growing width, each integrated adaptively,
/// stopping when a panel block contributes less than rel_tol of the total.
/// Throws ConvergenceError if the tail has not died off after max_panels.
double integrate_semi_infinite(const std::function<double(double)>& f,
                               double a, double scale, double rel_tol,
                               int max_panels = 60);

/// Tanh-sinh (double exponential) rule over (a, b); tolerates integrable
/// endpoint singularities such as log. `levels` doubles the node density.
double integrate_tanh_sinh(const std::function<double(double)>& f, double a,
                           double b, int levels = 7);

}  // namespace cmse
