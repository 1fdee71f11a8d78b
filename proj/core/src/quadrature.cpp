#include "hyplog/quadrature.hpp"

#include <cmath>
#include <complex>

namespace hyplog {

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a,
                     double fa, double b, double fb, double fm, double whole,
                     double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, flm);
  const double right = simpson(f, m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_step(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = simpson(f, a, fa, b, fb, fm);
  return adaptive_step(f, a, fa, b, fb, fm, whole, tol, 48);
}

double log_square_moment(double tol) {
  // Endpoint values by continuity: r (log r)^2 -> 0 at 0 and the 0/0 limit at
  // r = 1 equals 1/4.
  auto f = [](double r) -> double {
    if (r <= 0.0) return 0.0;
    if (r >= 1.0) return 0.25;
    const double lr = std::log(r);
    const double d = 1.0 - r * r;
    return lr * lr * r / (d * d);
  };
  return integrate_adaptive(f, 0.0, 1.0, tol);
}

double circle_log_integral(double a, int n) {
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * M_PI * k / n;
    sum += std::log(std::abs(1.0 - a * std::polar(1.0, theta)));
  }
  return sum * 2.0 * M_PI / n;
}

}  // namespace hyplog
