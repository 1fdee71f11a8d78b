#pragma once

#include <functional>

namespace hyplog {

/// Adaptive Simpson quadrature by interval bisection.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol = 1e-10);

/// int_0^1 (log r)^2 r / (1-r^2)^2 dr; the exact value is pi^2/24.
double log_square_moment(double tol = 1e-11);

/// Trapezoid evaluation of int_0^{2pi} log|1 - a e^{i theta}| d theta.
/// Vanishes for |a| <= 1 and equals 2 pi log|a| otherwise.
double circle_log_integral(double a, int n = 4096);

}  // namespace hyplog
