#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace hyplog {

/// Point of the open Poincare disk, stored in Euclidean coordinates.
struct PointD {
  double re{0.0};
  double im{0.0};

  PointD() = default;
  PointD(double re_, double im_) : re(re_), im(im_) {
    if (re * re + im * im >= 1.0)
      throw std::domain_error("PointD: point outside the open unit disk");
  }
  explicit PointD(std::complex<double> z) : PointD(z.real(), z.imag()) {}

  std::complex<double> c() const { return {re, im}; }
  double abs() const { return std::hypot(re, im); }
};

/// Pseudo-hyperbolic metric [z,w] = |z-w| / |1 - conj(z) w|, in [0,1).
double pseudo_distance(PointD z, PointD w);

/// d_h(z,w) = 2 atanh [z,w].
double hyperbolic_distance(PointD z, PointD w);

/// Disk automorphism phi_z(w) = (z-w)/(1 - conj(z) w); an involution with
/// phi_z(z) = 0 and phi_z(0) = z.
PointD mobius_phi(PointD z, PointD w);

/// Real-coefficient disk automorphism T(z) = (z-a)/(1-az), a in (0,1).
/// Maps the geodesic through (a,0) symmetric about the real axis onto the
/// imaginary diameter.
struct MobiusT {
  double a;
  explicit MobiusT(double a_) : a(a_) {
    if (!(a_ > 0.0 && a_ < 1.0))
      throw std::domain_error("MobiusT: parameter must lie in (0,1)");
  }
};

PointD map_T(MobiusT t, PointD z);
PointD map_T_inv(MobiusT t, PointD w);

/// Pseudo-hyperbolic disk Delta_rho(center) = { w : [center,w] < rho }.
struct HyperbolicDisk {
  PointD center;
  double rho;

  HyperbolicDisk(PointD c, double r) : center(c), rho(r) {
    if (!(r > 0.0 && r < 1.0))
      throw std::domain_error("HyperbolicDisk: radius must lie in (0,1)");
  }

  bool contains(PointD w) const { return pseudo_distance(center, w) < rho; }
};

struct EuclideanDisk {
  std::complex<double> center;
  double radius;
};

/// A pseudo-hyperbolic disk is a Euclidean disk; returns its parameters.
EuclideanDisk disk_euclidean_params(const HyperbolicDisk& d);

/// Lebesgue area of Delta_rho(z): pi (1-|z|^2)^2 rho^2 / (1-|z|^2 rho^2)^2.
double disk_lebesgue_measure(const HyperbolicDisk& d);

/// Hyperbolic measure tau(Delta_rho(z)) = rho^2/(1-rho^2), independent of z.
double hyperbolic_disk_measure(double rho);

}  // namespace hyplog
