#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hyplog/geodesic.hpp"
#include "hyplog/geometry.hpp"
#include "hyplog/quadrature.hpp"

using namespace hyplog;

namespace {

std::mt19937_64 rng_for(unsigned n) { return std::mt19937_64(0x5eed0000u + n); }

PointD random_point(std::mt19937_64& rng, double rmax = 0.95) {
  std::uniform_real_distribution<double> radial(0.0, 1.0);
  std::uniform_real_distribution<double> angular(0.0, 2.0 * std::numbers::pi);
  const double r = rmax * std::sqrt(radial(rng));
  const double t = angular(rng);
  return PointD(r * std::cos(t), r * std::sin(t));
}

Geodesic random_geodesic(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-4.0, 4.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> icpt(0.05, 0.95);
  if (coin(rng) < 0.5) return Geodesic::diameter(angle(rng));
  return Geodesic::arc(angle(rng), icpt(rng));
}

// Determinant of the reflection differential by central finite differences.
double fd_jacobian(const Geodesic& g, PointD z, double h = 1e-5) {
  const auto fx1 = g.reflect(PointD(z.re + h, z.im));
  const auto fx0 = g.reflect(PointD(z.re - h, z.im));
  const auto fy1 = g.reflect(PointD(z.re, z.im + h));
  const auto fy0 = g.reflect(PointD(z.re, z.im - h));
  const double a = (fx1.re - fx0.re) / (2 * h);
  const double b = (fy1.re - fy0.re) / (2 * h);
  const double c = (fx1.im - fx0.im) / (2 * h);
  const double d = (fy1.im - fy0.im) / (2 * h);
  return std::abs(a * d - b * c);
}

}  // namespace

TEST_CASE("points are confined to the open disk") {
  CHECK_THROWS_AS(PointD(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(PointD(0.8, 0.7), std::domain_error);
  CHECK_NOTHROW(PointD(0.999, 0.0));
  const PointD z(0.3, -0.4);
  CHECK(z.c() == std::complex<double>(0.3, -0.4));
  CHECK(z.abs() == doctest::Approx(0.5));
}

TEST_CASE("pseudo-hyperbolic metric basics") {
  const PointD a(0.5, 0.0), b(-0.5, 0.0), o(0.0, 0.0);
  CHECK(pseudo_distance(a, b) == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(pseudo_distance(o, a) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(pseudo_distance(a, a) == 0.0);
  CHECK(hyperbolic_distance(o, a) == doctest::Approx(std::log(3.0)).epsilon(1e-14));

  auto rng = rng_for(1);
  for (int i = 0; i < 1000; ++i) {
    const PointD z = random_point(rng), w = random_point(rng);
    const double d = pseudo_distance(z, w);
    CHECK(d >= 0.0);
    CHECK(d < 1.0);
    CHECK(pseudo_distance(w, z) == doctest::Approx(d).epsilon(1e-13));
    CHECK(hyperbolic_distance(z, w) ==
          doctest::Approx(2.0 * std::atanh(d)).epsilon(1e-12));
  }
}

TEST_CASE("pseudo-hyperbolic metric is Mobius invariant") {
  auto rng = rng_for(2);
  for (int i = 0; i < 1000; ++i) {
    const PointD p = random_point(rng, 0.9);
    const PointD z = random_point(rng), w = random_point(rng);
    const double before = pseudo_distance(z, w);
    const double after = pseudo_distance(mobius_phi(p, z), mobius_phi(p, w));
    CHECK(after == doctest::Approx(before).epsilon(1e-11));
  }
}

TEST_CASE("phi_z is an involution exchanging z and 0") {
  auto rng = rng_for(3);
  for (int i = 0; i < 1000; ++i) {
    const PointD z = random_point(rng, 0.9), w = random_point(rng);
    CHECK(mobius_phi(z, z).abs() < 1e-14);
    const PointD back = mobius_phi(z, mobius_phi(z, w));
    CHECK(std::abs(back.c() - w.c()) < 1e-12);
    CHECK(std::abs(mobius_phi(z, PointD(0.0, 0.0)).c() - z.c()) < 1e-14);
  }
}

TEST_CASE("map T sends a to 0 and the arc top to i") {
  CHECK_THROWS_AS(MobiusT(0.0), std::domain_error);
  CHECK_THROWS_AS(MobiusT(1.0), std::domain_error);
  const MobiusT t(0.5);
  CHECK(map_T(t, PointD(0.5, 0.0)).abs() < 1e-15);

  // highest point of the supporting circle: A = (2a + i(1-a^2))/(1+a^2)
  const double a = 0.5;
  const double Ax = (2 * a) / (1 + a * a), Ay = (1 - a * a) / (1 + a * a);
  const PointD image = map_T(t, PointD(Ax * 0.999999, Ay * 0.999999));
  CHECK(std::abs(image.re) < 1e-5);
  CHECK(image.im > 0.99);

  auto rng = rng_for(4);
  for (int i = 0; i < 1000; ++i) {
    std::uniform_real_distribution<double> icpt(0.05, 0.95);
    const MobiusT tt(icpt(rng));
    const PointD z = random_point(rng);
    const PointD w = map_T(tt, z);
    CHECK(std::abs(map_T_inv(tt, w).c() - z.c()) < 1e-12);
    CHECK(pseudo_distance(z, PointD(tt.a, 0.0)) ==
          doctest::Approx(w.abs()).epsilon(1e-11));
  }
}

TEST_CASE("pseudo-hyperbolic disks are Euclidean disks") {
  const HyperbolicDisk d(PointD(0.3, 0.4), 0.25);
  const EuclideanDisk e = disk_euclidean_params(d);
  // center z (1-rho^2)/(1 - rho^2 |z|^2), radius rho (1-|z|^2)/(1 - rho^2 |z|^2)
  const double zz = 0.25, rr = 0.0625;
  CHECK(std::abs(e.center - std::complex<double>(0.3, 0.4) * ((1 - rr) / (1 - rr * zz))) <
        1e-14);
  CHECK(e.radius == doctest::Approx(0.25 * (1 - zz) / (1 - rr * zz)).epsilon(1e-14));

  // membership agrees with the metric definition
  auto rng = rng_for(5);
  for (int i = 0; i < 1000; ++i) {
    const PointD w = random_point(rng);
    const bool metric = d.contains(w);
    const bool euclid = std::abs(w.c() - e.center) < e.radius;
    CHECK(metric == euclid);
  }

  CHECK_THROWS_AS(HyperbolicDisk(PointD(0.0, 0.0), 1.0), std::domain_error);
  CHECK_THROWS_AS(HyperbolicDisk(PointD(0.0, 0.0), 0.0), std::domain_error);
}

TEST_CASE("disk measures") {
  const HyperbolicDisk d(PointD(0.6, 0.0), 0.25);
  // pi (1-0.36)^2 0.0625 / (1 - 0.0625*0.36)^2
  const double expect =
      std::numbers::pi * 0.64 * 0.64 * 0.0625 / ((1 - 0.0225) * (1 - 0.0225));
  CHECK(disk_lebesgue_measure(d) == doctest::Approx(expect).epsilon(1e-14));
  CHECK(disk_lebesgue_measure(HyperbolicDisk(PointD(0.5, 0.0), 0.1)) ==
        doctest::Approx(0.0177578).epsilon(1e-4));
  CHECK(disk_lebesgue_measure(HyperbolicDisk(PointD(0.0, 0.0), 0.3)) ==
        doctest::Approx(std::numbers::pi * 0.09).epsilon(1e-14));

  CHECK(hyperbolic_disk_measure(0.5) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  // tau(Delta_rho(z)) is independent of z: integrate the hyperbolic density
  // over the Euclidean disk in polar coordinates about its center.
  auto rng = rng_for(6);
  for (int i = 0; i < 25; ++i) {
    std::uniform_real_distribution<double> radial(0.05, 0.8);
    const PointD z = random_point(rng, 0.8);
    const double rho = radial(rng);
    const HyperbolicDisk disk(z, rho);
    const EuclideanDisk e = disk_euclidean_params(disk);
    const auto ring = [&](double s) {
      const int m = 512;
      double sum = 0.0;
      for (int k = 0; k < m; ++k) {
        const double t = 2.0 * std::numbers::pi * k / m;
        const std::complex<double> w = e.center + s * std::polar(1.0, t);
        const double q = 1.0 - std::norm(w);
        sum += s / (std::numbers::pi * q * q);
      }
      return sum * (2.0 * std::numbers::pi / m);
    };
    const double tau = integrate_adaptive(ring, 0.0, e.radius, 1e-12);
    CHECK(tau == doctest::Approx(hyperbolic_disk_measure(rho)).epsilon(1e-9));
  }
}

TEST_CASE("diameter reflection") {
  const Geodesic g = Geodesic::diameter(0.0);
  const PointD z(0.3, 0.4);
  const PointD s = g.reflect(z);
  CHECK(s.re == doctest::Approx(0.3));
  CHECK(s.im == doctest::Approx(-0.4));
  // positive side is Re(i e^{-i theta} z) > 0, the lower half plane here
  CHECK(g.side_of(PointD(0.2, -0.5)) == Side::Positive);
  CHECK(g.side_of(PointD(0.2, 0.5)) == Side::Negative);
  CHECK(g.side_of(PointD(0.2, 0.0)) == Side::On);

  const Geodesic v = Geodesic::diameter(std::numbers::pi / 2);
  const PointD sv = v.reflect(z);
  CHECK(sv.re == doctest::Approx(-0.3));
  CHECK(sv.im == doctest::Approx(0.4));
}

TEST_CASE("arc reflection fixes the arc and swaps its sides") {
  const Geodesic g = Geodesic::arc(0.0, 0.5);
  // a itself lies on the arc
  const PointD fixed = g.reflect(PointD(0.5, 0.0));
  CHECK(std::abs(fixed.c() - std::complex<double>(0.5, 0.0)) < 1e-13);
  CHECK(g.side_of(PointD(0.5, 0.0)) == Side::On);
  // origin maps to the circle inversion through z0=1.25, r=0.75:
  // sigma(0) = z0 - r^2/z0 = 1.25 - 0.5625/1.25 = 0.8
  const PointD s0 = g.reflect(PointD(0.0, 0.0));
  CHECK(std::abs(s0.c() - std::complex<double>(0.8, 0.0)) < 1e-13);
  CHECK(g.side_of(PointD(0.0, 0.0)) == Side::Negative);
  CHECK(g.side_of(PointD(0.8, 0.0)) == Side::Positive);

  auto rng = rng_for(7);
  for (int i = 0; i < 1000; ++i) {
    const Geodesic h = random_geodesic(rng);
    const PointD z = random_point(rng, 0.9);
    const Side side = h.side_of(z);
    const PointD sz = h.reflect(z);
    // involution
    CHECK(std::abs(h.reflect(sz).c() - z.c()) < 1e-10);
    // swaps strict sides
    if (side == Side::Positive) CHECK(h.side_of(sz) == Side::Negative);
    if (side == Side::Negative) CHECK(h.side_of(sz) == Side::Positive);
    // reflection is a hyperbolic isometry
    const PointD w = random_point(rng, 0.9);
    CHECK(pseudo_distance(h.reflect(z), h.reflect(w)) ==
          doctest::Approx(pseudo_distance(z, w)).epsilon(1e-10));
  }
}

TEST_CASE("reflection jacobian matches finite differences") {
  auto rng = rng_for(8);
  for (int i = 0; i < 200; ++i) {
    const Geodesic g = random_geodesic(rng);
    const PointD z = random_point(rng, 0.85);
    const double claimed = g.reflection_jacobian(z);
    const double q = (1.0 - std::norm(g.reflect(z).c())) / (1.0 - std::norm(z.c()));
    CHECK(claimed == doctest::Approx(q * q).epsilon(1e-12));
    CHECK(fd_jacobian(g, z) == doctest::Approx(claimed).epsilon(1e-5));
  }
}

TEST_CASE("arc endpoints lie on the unit circle") {
  auto rng = rng_for(9);
  for (int i = 0; i < 200; ++i) {
    std::uniform_real_distribution<double> angle(-4.0, 4.0);
    std::uniform_real_distribution<double> icpt(0.05, 0.95);
    const Geodesic g = Geodesic::arc(angle(rng), icpt(rng));
    const auto [A, B] = g.endpoints();
    CHECK(std::abs(A) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(B) == doctest::Approx(1.0).epsilon(1e-13));
    // endpoints are fixed in the limit: nearby interior points barely move
    const PointD near(0.999 * A.real(), 0.999 * A.imag());
    CHECK(std::abs(g.reflect(near).c() - near.c()) < 2e-2);
  }
}

TEST_CASE("theta is normalized mod pi") {
  const Geodesic a = Geodesic::diameter(0.3);
  const Geodesic b = Geodesic::diameter(0.3 + std::numbers::pi);
  CHECK(a.same_as(b));
  auto rng = rng_for(10);
  for (int i = 0; i < 200; ++i) {
    const PointD z = random_point(rng);
    CHECK(std::abs(a.reflect(z).c() - b.reflect(z).c()) < 1e-12);
    CHECK(a.side_of(z) == b.side_of(z));
  }
  const Geodesic c = Geodesic::arc(0.3, 0.5);
  const Geodesic d = Geodesic::arc(0.3 + 2 * std::numbers::pi, 0.5);
  CHECK(c.same_as(d));
  CHECK_FALSE(c.same_as(a));
}

TEST_CASE("quadrature identities") {
  CHECK(log_square_moment() ==
        doctest::Approx(std::numbers::pi * std::numbers::pi / 24.0).epsilon(1e-9));
  CHECK(std::abs(circle_log_integral(0.5)) < 1e-10);
  CHECK(std::abs(circle_log_integral(0.9)) < 1e-8);
  CHECK(circle_log_integral(2.0) ==
        doctest::Approx(2.0 * std::numbers::pi * std::log(2.0)).epsilon(1e-10));
  CHECK(integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}
