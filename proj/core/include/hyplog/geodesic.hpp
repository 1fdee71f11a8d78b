#pragma once

#include <utility>

#include "hyplog/geometry.hpp"

namespace hyplog {

enum class Side { Positive, Negative, On };

/// Geodesic of the Poincare disk in canonical form: either a diameter at
/// angle theta with the real axis, or a circular arc described by the
/// rotation theta making it symmetric about the real axis together with its
/// positive real-axis intercept a.
///
/// For an arc, the supporting circle (after rotation) has center
/// z0 = (1+a^2)/(2a) and radius (1-a^2)/(2a), orthogonal to the unit circle.
class Geodesic {
 public:
  enum class Kind { Diameter, Arc };

  static Geodesic diameter(double theta) { return Geodesic(Kind::Diameter, theta, 0.0); }
  static Geodesic arc(double theta, double a) { return Geodesic(Kind::Arc, theta, a); }

  Kind kind() const { return kind_; }
  double theta() const { return theta_; }
  double intercept() const { return a_; }

  /// Positive corresponds to {Re > 0} in the model half-plane picture: for an
  /// arc this is the side containing the supporting circle's interior.
  Side side_of(PointD z) const;

  PointD reflect(PointD z) const;

  /// |det J| of the reflection: (1-|sigma(z)|^2)^2 / (1-|z|^2)^2.
  double reflection_jacobian(PointD z) const;

  /// Endpoints of an arc geodesic on the unit circle.
  std::pair<std::complex<double>, std::complex<double>> endpoints() const;

  bool same_as(const Geodesic& other) const;

 private:
  Geodesic(Kind kind, double theta, double a);

  Kind kind_;
  double theta_;
  double a_;
};

inline Side geodesic_side(const Geodesic& g, PointD z) { return g.side_of(z); }
inline PointD reflect(const Geodesic& g, PointD z) { return g.reflect(z); }
inline double reflection_jacobian(const Geodesic& g, PointD z) {
  return g.reflection_jacobian(z);
}

}  // namespace hyplog
