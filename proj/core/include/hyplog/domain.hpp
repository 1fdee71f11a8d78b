#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyplog/geodesic.hpp"
#include "hyplog/geometry.hpp"

namespace hyplog {

/// Boolean combination of pseudo-hyperbolic disks, evaluated left to right.
struct DiskOp {
  HyperbolicDisk disk;
  bool subtract{false};
};

struct DomainSpec {
  std::vector<DiskOp> disks;

  bool contains(PointD z) const;

  /// Euclidean radius of a circle containing every included disk.
  double bounding_radius() const;

  nlohmann::json to_json() const;
  static DomainSpec from_json(const nlohmann::json& j);
};

/// One open side of a geodesic. Points classified On belong to the
/// complement, so membership is total and deterministic.
struct Polarizer {
  Geodesic geodesic;
  Side side{Side::Positive};

  bool contains(PointD z) const { return geodesic.side_of(z) == side; }
};

/// Cell-center nodes of a Euclidean lattice of pitch h with hyperbolic
/// weights h^2 / (pi (1-|z|^2)^2). A paired grid is closed under the
/// polarizer's reflection; `pairing` is the matching involution and paired
/// nodes share their weight exactly.
struct QuadratureGrid {
  std::vector<PointD> nodes;
  std::vector<double> weights;
  double pitch{0.0};
  std::vector<std::size_t> pairing;
  std::optional<Polarizer> polarizer;

  std::size_t size() const { return nodes.size(); }
  bool paired() const { return !pairing.empty(); }
};

using GridPtr = std::shared_ptr<const QuadratureGrid>;

struct DomainMask {
  GridPtr grid;
  std::vector<char> inside;

  std::size_t count() const;
  /// Sum of hyperbolic weights over inside nodes.
  double measure() const;
};

struct ScalarField {
  GridPtr grid;
  std::vector<double> values;
};

struct GriddedDomain {
  GridPtr grid;
  DomainMask mask;
};

GriddedDomain build_grid(const DomainSpec& spec, double pitch);
GriddedDomain build_paired_grid(const DomainSpec& spec, double pitch,
                                const Polarizer& p);

DomainMask polarize_mask(const DomainMask& m, const Polarizer& p);
ScalarField polarize_field(const ScalarField& f, const Polarizer& p);

/// Mask of the reflected set sigma(Omega) on a paired grid.
DomainMask reflect_mask(const DomainMask& m);

/// Lebesgue area of the symmetric difference, counted as pitch^2 per node.
double symmetric_difference_measure(const DomainMask& a, const DomainMask& b);

double integrate(const ScalarField& f);
double l2_norm(const ScalarField& f);

}  // namespace hyplog
