#include "hyplog/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace hyplog {

namespace {

constexpr int kCirclePoints = 256;
constexpr int kDecayAngles = 64;

// Empirical constant for the representation-formula residual model C * pitch,
// calibrated on refinement pairs for disk domains.
constexpr double kRepresentationSlope = 0.05;

}  // namespace

nlohmann::json Report::to_json() const {
  nlohmann::json q = nlohmann::json::object();
  for (const auto& [key, value] : quantities) q[key] = value;
  return nlohmann::json{{"name", name},       {"quantities", q},
                        {"tolerance", tolerance}, {"pass", pass},
                        {"pitch", pitch},     {"nodes", nodes},
                        {"seed", seed}};
}

Report verify_reverse_faber_krahn(const DomainSpec& spec, const Polarizer& p,
                                  double pitch) {
  const GriddedDomain dom = build_paired_grid(spec, pitch, p);
  const DomainMask polarized = polarize_mask(dom.mask, p);
  const DomainMask reflected = reflect_mask(dom.mask);

  const double tau_omega = top_eigenvalue(assemble(*dom.grid, dom.mask));
  const double tau_polarized = top_eigenvalue(assemble(*dom.grid, polarized));
  const double diff = tau_polarized - tau_omega;

  Report r;
  r.name = "reverse_faber_krahn";
  r.tolerance = 1e-6;
  r.pitch = pitch;
  r.nodes = dom.mask.count();
  r.quantities["tau_omega"] = tau_omega;
  r.quantities["tau_polarized"] = tau_polarized;
  r.quantities["difference"] = diff;
  r.quantities["symdiff_omega"] = symmetric_difference_measure(polarized, dom.mask);
  r.quantities["symdiff_reflected"] = symmetric_difference_measure(polarized, reflected);
  // heuristic converse flag: when the polarized set differs from both the
  // domain and its reflection by more than a grid cell, a strict increase is
  // expected; reported only, not part of the pass predicate
  const double cell = pitch * pitch;
  r.quantities["strict_expected"] =
      (r.quantities["symdiff_omega"] > cell && r.quantities["symdiff_reflected"] > cell)
          ? 1.0
          : 0.0;
  r.pass = diff >= -r.tolerance * tau_omega;
  return r;
}

Report verify_riesz(const GriddedDomain& dom, const Polarizer& p,
                    const ScalarField& f) {
  const ScalarField pf = polarize_field(f, p);
  const double e_f = energy(f, f);
  const double e_pf = energy(pf, pf);

  Report r;
  r.name = "riesz";
  r.tolerance = 1e-9 * std::max(1.0, std::abs(e_f));
  r.pitch = dom.grid->pitch;
  r.nodes = dom.mask.count();
  r.quantities["energy"] = e_f;
  r.quantities["energy_polarized"] = e_pf;
  r.quantities["difference"] = e_pf - e_f;
  r.pass = e_f <= e_pf + r.tolerance;
  return r;
}

Report verify_riesz(const DomainSpec& spec, const Polarizer& p, double pitch,
                    std::uint64_t seed) {
  const GriddedDomain dom = build_paired_grid(spec, pitch, p);
  Report r = verify_riesz(dom, p, random_nonneg_field(dom, seed));
  r.seed = seed;
  return r;
}

Report verify_positivity(const DomainSpec& spec,
                         const std::vector<double>& pitches) {
  Report r;
  r.name = "positivity";
  r.tolerance = 0.0;
  double overall = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < pitches.size(); ++k) {
    const GriddedDomain dom = build_grid(spec, pitches[k]);
    const Spectrum s = eigen_decompose(assemble(dom));
    const double lambda_min = s.eigenvalues[s.eigenvalues.size() - 1];
    r.quantities["lambda_min_" + std::to_string(k)] = lambda_min;
    overall = std::min(overall, lambda_min);
    r.pitch = pitches[k];
    r.nodes = dom.mask.count();
  }
  r.quantities["lambda_min"] = overall;
  r.pass = overall > 0.0;
  return r;
}

Report verify_representation(const DomainSpec& spec, double pitch, PointD z,
                             double r_circle) {
  if (!(r_circle > 0.0 && r_circle < 1.0 - z.abs()))
    throw std::invalid_argument("verify_representation: need 0 < r < 1-|z|");

  const GriddedDomain dom = build_grid(spec, pitch);
  const DiscreteOperator op = assemble(dom);
  const Eigenpair pair = top_eigenpair(op);
  const double tau = pair.tau;

  const double lhs = apply_potential(pair.u, z);

  double circle_sum = 0.0;
  for (int k = 0; k < kCirclePoints; ++k) {
    const double theta = 2.0 * M_PI * k / kCirclePoints;
    const PointD zk = mobius_phi(z, PointD(std::polar(r_circle, theta)));
    circle_sum += apply_potential(pair.u, zk);
  }
  const double circle_term = circle_sum / kCirclePoints;

  double disk_term = 0.0;
  const QuadratureGrid& grid = *dom.grid;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (pair.u.values[j] == 0.0) continue;
    const double s = pseudo_distance(z, grid.nodes[j]);
    if (s >= r_circle || s == 0.0) continue;
    disk_term += 0.5 * std::log(s / r_circle) * pair.u.values[j] * grid.weights[j];
  }

  const double rhs = circle_term - disk_term;

  Report rep;
  rep.name = "representation";
  rep.tolerance = kRepresentationSlope * pitch;
  rep.pitch = pitch;
  rep.nodes = dom.mask.count();
  rep.quantities["tau_h"] = tau;
  rep.quantities["lhs"] = lhs;
  rep.quantities["circle_term"] = circle_term;
  rep.quantities["disk_term"] = disk_term;
  rep.quantities["residual"] = std::abs(lhs - rhs);
  rep.pass = rep.quantities["residual"] <= rep.tolerance;
  return rep;
}

Report verify_uniform_bound(const DomainSpec& spec, int trials, double pitch,
                            std::uint64_t seed) {
  const GriddedDomain dom = build_grid(spec, pitch);
  const DiscreteOperator op = assemble(dom);
  const double tau = top_eigenvalue(op);
  const double bound = M_PI * M_PI / 48.0;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  // Evaluation points: a node subsample plus random interior points.
  std::vector<PointD> sample;
  const std::size_t n = dom.grid->size();
  const std::size_t stride = std::max<std::size_t>(1, n / 256);
  for (std::size_t i = 0; i < n; i += stride) sample.push_back(dom.grid->nodes[i]);
  for (int k = 0; k < 128; ++k) {
    double x, y;
    do {
      x = unit(rng);
      y = unit(rng);
    } while (x * x + y * y >= 0.996);
    sample.emplace_back(x, y);
  }

  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    ScalarField f{dom.grid, std::vector<double>(n, 0.0)};
    for (std::size_t i = 0; i < n; ++i)
      if (dom.mask.inside[i]) f.values[i] = gauss(rng);
    const double norm = l2_norm(f);
    for (double& v : f.values) v /= norm;
    for (const PointD& z : sample) {
      const double value = apply_potential(f, z);
      worst = std::max(worst, value * value);
    }
  }

  Report r;
  r.name = "uniform_bound";
  r.tolerance = 1e-2;
  r.pitch = pitch;
  r.nodes = dom.mask.count();
  r.seed = seed;
  r.quantities["max_potential_sq"] = worst;
  r.quantities["bound"] = bound;
  r.quantities["tau_h"] = tau;
  r.pass = worst <= bound * (1.0 + r.tolerance) &&
           tau <= M_PI / std::sqrt(48.0) + r.tolerance;
  return r;
}

Report verify_boundary_decay(const DomainSpec& spec,
                             const std::vector<double>& radii, double pitch) {
  if (radii.empty()) throw std::invalid_argument("verify_boundary_decay: no radii");
  const double bound = spec.bounding_radius();
  for (double rho : radii)
    if (rho <= bound)
      throw std::invalid_argument(
          "verify_boundary_decay: radius inside the domain's bounding circle");

  const GriddedDomain dom = build_grid(spec, pitch);
  const Eigenpair pair = top_eigenpair(assemble(dom));

  Report r;
  r.name = "boundary_decay";
  r.tolerance = 1e-10;
  r.pitch = pitch;
  r.nodes = dom.mask.count();

  std::vector<double> values;
  for (std::size_t k = 0; k < radii.size(); ++k) {
    double vmax = 0.0;
    for (int a = 0; a < kDecayAngles; ++a) {
      const double theta = 2.0 * M_PI * a / kDecayAngles;
      const PointD z(std::polar(radii[k], theta));
      vmax = std::max(vmax, std::abs(apply_potential(pair.u, z)));
    }
    values.push_back(vmax);
    r.quantities["potential_max_" + std::to_string(k)] = vmax;
  }

  bool monotone = true;
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k] > values[k - 1] + r.tolerance) monotone = false;
  r.quantities["decay_ratio"] =
      values.front() > 0.0 ? values.back() / values.front() : 0.0;
  r.pass = monotone && values.back() < values.front() / 10.0;
  return r;
}

Report verify_first_eigenfunction(const DomainSpec& spec, double pitch) {
  const GriddedDomain dom = build_grid(spec, pitch);
  const DiscreteOperator op = assemble(dom);
  const Spectrum s = eigen_decompose(op);
  const Eigenpair pair = principal_eigenpair(op, s);

  double min_value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < dom.grid->size(); ++i)
    if (dom.mask.inside[i]) min_value = std::min(min_value, pair.u.values[i]);

  const double gap = (s.eigenvalues[0] - s.eigenvalues[1]) / s.eigenvalues[0];

  Report r;
  r.name = "first_eigenfunction";
  r.tolerance = 0.0;
  r.pitch = pitch;
  r.nodes = dom.mask.count();
  r.quantities["tau_h"] = pair.tau;
  r.quantities["min_value"] = min_value;
  r.quantities["relative_gap"] = gap;
  r.pass = min_value > 0.0 && gap > 0.0;
  return r;
}

DomainSpec random_domain(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);

  auto random_disk = [&](double max_center, double rho_lo, double rho_hi) {
    const double rc = max_center * std::sqrt(unit(rng));
    const double phi = angle(rng);
    const double rho = rho_lo + (rho_hi - rho_lo) * unit(rng);
    return HyperbolicDisk(PointD(std::polar(rc, phi)), rho);
  };

  DomainSpec spec;
  const int shape = static_cast<int>(unit(rng) * 3.0);
  if (shape == 0) {
    spec.disks.push_back({random_disk(0.45, 0.2, 0.45), false});
  } else if (shape == 1) {
    spec.disks.push_back({random_disk(0.4, 0.2, 0.4), false});
    spec.disks.push_back({random_disk(0.4, 0.2, 0.4), false});
  } else {
    const HyperbolicDisk outer = random_disk(0.35, 0.3, 0.45);
    spec.disks.push_back({outer, false});
    spec.disks.push_back(
        {HyperbolicDisk(outer.center, outer.rho * (0.25 + 0.25 * unit(rng))), true});
  }
  return spec;
}

Polarizer random_polarizer(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double theta = unit(rng) * M_PI;
  const Side side = unit(rng) < 0.5 ? Side::Positive : Side::Negative;
  if (unit(rng) < 0.4) return {Geodesic::diameter(theta), side};
  // arcs always polarize toward the origin side; the far side is a thin
  // boundary lens whose lattice scan undersamples central domains
  return {Geodesic::arc(theta, 0.25 + 0.5 * unit(rng)), Side::Negative};
}

ScalarField random_nonneg_field(const GriddedDomain& dom, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xda942042e4dd58b5ull);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ScalarField f{dom.grid, std::vector<double>(dom.grid->size(), 0.0)};
  for (std::size_t i = 0; i < dom.grid->size(); ++i)
    if (dom.mask.inside[i]) f.values[i] = unit(rng);
  return f;
}

}  // namespace hyplog
