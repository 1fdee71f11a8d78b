#include "hyplog/geometry.hpp"

namespace hyplog {

double pseudo_distance(PointD z, PointD w) {
  const std::complex<double> zc = z.c(), wc = w.c();
  return std::abs(zc - wc) / std::abs(1.0 - std::conj(zc) * wc);
}

double hyperbolic_distance(PointD z, PointD w) {
  return 2.0 * std::atanh(pseudo_distance(z, w));
}

PointD mobius_phi(PointD z, PointD w) {
  const std::complex<double> zc = z.c(), wc = w.c();
  return PointD((zc - wc) / (1.0 - std::conj(zc) * wc));
}

PointD map_T(MobiusT t, PointD z) {
  const std::complex<double> zc = z.c();
  return PointD((zc - t.a) / (1.0 - t.a * zc));
}

PointD map_T_inv(MobiusT t, PointD w) {
  const std::complex<double> wc = w.c();
  return PointD((wc + t.a) / (1.0 + t.a * wc));
}

EuclideanDisk disk_euclidean_params(const HyperbolicDisk& d) {
  const std::complex<double> z = d.center.c();
  const double r2 = d.rho * d.rho;
  const double z2 = std::norm(z);
  const double denom = 1.0 - r2 * z2;
  return {z * (1.0 - r2) / denom, d.rho * (1.0 - z2) / denom};
}

double disk_lebesgue_measure(const HyperbolicDisk& d) {
  const EuclideanDisk e = disk_euclidean_params(d);
  return M_PI * e.radius * e.radius;
}

double hyperbolic_disk_measure(double rho) {
  if (!(rho > 0.0 && rho < 1.0))
    throw std::domain_error("hyperbolic_disk_measure: rho must lie in (0,1)");
  return rho * rho / (1.0 - rho * rho);
}

}  // namespace hyplog
