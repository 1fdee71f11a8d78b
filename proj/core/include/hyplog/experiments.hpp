#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyplog/spectral.hpp"

namespace hyplog {

/// Structured pass/fail record for one property check.
struct Report {
  std::string name;
  std::map<std::string, double> quantities;
  double tolerance{0.0};
  bool pass{false};
  double pitch{0.0};
  std::size_t nodes{0};
  std::uint64_t seed{0};

  nlohmann::json to_json() const;
};

/// tau_h does not decrease under polarization of the domain; also reports the
/// two symmetric-difference measures characterizing equality.
Report verify_reverse_faber_krahn(const DomainSpec& spec, const Polarizer& p,
                                  double pitch);

/// Energy does not decrease under polarization of the function.
Report verify_riesz(const GriddedDomain& dom, const Polarizer& p,
                    const ScalarField& f);
Report verify_riesz(const DomainSpec& spec, const Polarizer& p, double pitch,
                    std::uint64_t seed);

/// Every eigenvalue of the assembled operator is strictly positive.
Report verify_positivity(const DomainSpec& spec,
                         const std::vector<double>& pitches);

/// Circle-average representation of the extended eigenfunction.
Report verify_representation(const DomainSpec& spec, double pitch, PointD z,
                             double r);

/// max |potential|^2 <= (pi^2/48) |f|^2 over random unit fields, and
/// tau_h <= pi/sqrt(48) with slack.
Report verify_uniform_bound(const DomainSpec& spec, int trials, double pitch,
                            std::uint64_t seed);

/// Potential of the principal eigenfunction decays toward the boundary.
Report verify_boundary_decay(const DomainSpec& spec,
                             const std::vector<double>& radii, double pitch);

/// Principal eigenvector one-signed with a positive spectral gap.
Report verify_first_eigenfunction(const DomainSpec& spec, double pitch);

/// Seeded generators for reproducible experiment batches.
DomainSpec random_domain(std::uint64_t seed);
Polarizer random_polarizer(std::uint64_t seed);
ScalarField random_nonneg_field(const GriddedDomain& dom, std::uint64_t seed);

}  // namespace hyplog
