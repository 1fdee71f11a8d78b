#include "hyplog/geodesic.hpp"

namespace hyplog {

namespace {

constexpr double kOnTolerance = 1e-12;
constexpr double kInterceptMargin = 1e-9;

double reduce_mod_pi(double theta) {
  theta = std::fmod(theta, M_PI);
  if (theta < 0.0) theta += M_PI;
  return theta;
}

}  // namespace

Geodesic::Geodesic(Kind kind, double theta, double a)
    : kind_(kind), theta_(reduce_mod_pi(theta)), a_(a) {
  if (kind_ == Kind::Arc && !(a >= kInterceptMargin && a <= 1.0 - kInterceptMargin))
    throw std::domain_error("Geodesic: arc intercept must lie in (0,1)");
}

Side Geodesic::side_of(PointD z) const {
  double s;
  if (kind_ == Kind::Diameter) {
    s = (std::complex<double>(0.0, 1.0) * std::polar(1.0, -theta_) * z.c()).real();
  } else {
    s = map_T(MobiusT(a_), PointD(std::polar(1.0, theta_) * z.c())).re;
  }
  if (std::abs(s) < kOnTolerance) return Side::On;
  return s > 0.0 ? Side::Positive : Side::Negative;
}

PointD Geodesic::reflect(PointD z) const {
  if (kind_ == Kind::Diameter)
    return PointD(std::polar(1.0, 2.0 * theta_) * std::conj(z.c()));
  const MobiusT t(a_);
  const PointD rotated(std::polar(1.0, theta_) * z.c());
  const PointD image = map_T_inv(t, PointD(-std::conj(map_T(t, rotated).c())));
  return PointD(std::polar(1.0, -theta_) * image.c());
}

double Geodesic::reflection_jacobian(PointD z) const {
  const double num = 1.0 - std::norm(reflect(z).c());
  const double den = 1.0 - std::norm(z.c());
  return (num * num) / (den * den);
}

std::pair<std::complex<double>, std::complex<double>> Geodesic::endpoints() const {
  if (kind_ != Kind::Arc)
    throw std::logic_error("Geodesic::endpoints: diameter has no arc endpoints");
  const double denom = 1.0 + a_ * a_;
  const std::complex<double> top(2.0 * a_ / denom, (1.0 - a_ * a_) / denom);
  const std::complex<double> rot = std::polar(1.0, -theta_);
  return {rot * top, rot * std::conj(top)};
}

bool Geodesic::same_as(const Geodesic& other) const {
  if (kind_ != other.kind_) return false;
  // angle reduction leaves ulp-level residue, so compare with a small band
  double dt = std::abs(theta_ - other.theta_);
  dt = std::min(dt, M_PI - dt);
  return dt <= 1e-12 && std::abs(a_ - other.a_) <= 1e-12;
}

}  // namespace hyplog
