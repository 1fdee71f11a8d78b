#include "hyplog/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hyplog {

namespace {

double cell_weight(PointD z, double pitch) {
  const double d = 1.0 - std::norm(z.c());
  return pitch * pitch / (M_PI * d * d);
}

void check_pitch(double pitch) {
  if (!(pitch > 0.0 && pitch < 1.0))
    throw std::invalid_argument("grid pitch must lie in (0,1)");
}

void require_pairing(const QuadratureGrid& grid, const Polarizer& p) {
  if (!grid.paired() || !grid.polarizer)
    throw std::invalid_argument("operation requires a paired grid");
  if (!grid.polarizer->geodesic.same_as(p.geodesic) || grid.polarizer->side != p.side)
    throw std::invalid_argument("grid is paired with a different polarizer");
}

}  // namespace

bool DomainSpec::contains(PointD z) const {
  bool in = false;
  for (const DiskOp& op : disks) {
    if (op.subtract)
      in = in && !op.disk.contains(z);
    else
      in = in || op.disk.contains(z);
  }
  return in;
}

double DomainSpec::bounding_radius() const {
  double r = 0.0;
  for (const DiskOp& op : disks) {
    if (op.subtract) continue;
    const EuclideanDisk e = disk_euclidean_params(op.disk);
    r = std::max(r, std::abs(e.center) + e.radius);
  }
  return r;
}

nlohmann::json DomainSpec::to_json() const {
  nlohmann::json out;
  out["disks"] = nlohmann::json::array();
  for (const DiskOp& op : disks) {
    out["disks"].push_back({{"cx", op.disk.center.re},
                            {"cy", op.disk.center.im},
                            {"rho", op.disk.rho},
                            {"op", op.subtract ? "subtract" : "union"}});
  }
  return out;
}

DomainSpec DomainSpec::from_json(const nlohmann::json& j) {
  DomainSpec spec;
  for (const auto& d : j.at("disks")) {
    const std::string op = d.value("op", "union");
    if (op != "union" && op != "subtract")
      throw std::invalid_argument("DomainSpec: op must be union or subtract");
    spec.disks.push_back(
        {HyperbolicDisk(PointD(d.at("cx").get<double>(), d.at("cy").get<double>()),
                        d.at("rho").get<double>()),
         op == "subtract"});
  }
  if (spec.disks.empty())
    throw std::invalid_argument("DomainSpec: no disks given");
  return spec;
}

std::size_t DomainMask::count() const {
  return static_cast<std::size_t>(std::count(inside.begin(), inside.end(), char(1)));
}

double DomainMask::measure() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < inside.size(); ++i)
    if (inside[i]) sum += grid->weights[i];
  return sum;
}

GriddedDomain build_grid(const DomainSpec& spec, double pitch) {
  check_pitch(pitch);
  auto grid = std::make_shared<QuadratureGrid>();
  grid->pitch = pitch;

  const double bound = std::min(spec.bounding_radius() + pitch, 1.0);
  const long m = static_cast<long>(std::ceil(bound / pitch)) + 1;
  for (long j = -m; j < m; ++j) {
    for (long i = -m; i < m; ++i) {
      const double x = (i + 0.5) * pitch;
      const double y = (j + 0.5) * pitch;
      if (x * x + y * y >= 1.0) continue;
      const PointD z(x, y);
      if (!spec.contains(z)) continue;
      grid->nodes.push_back(z);
      grid->weights.push_back(cell_weight(z, pitch));
    }
  }
  if (grid->size() < 16)
    throw std::runtime_error("build_grid: too few nodes inside the domain");

  DomainMask mask{grid, std::vector<char>(grid->size(), 1)};
  return {grid, std::move(mask)};
}

GriddedDomain build_paired_grid(const DomainSpec& spec, double pitch,
                                const Polarizer& p) {
  check_pitch(pitch);
  auto grid = std::make_shared<QuadratureGrid>();
  grid->pitch = pitch;
  grid->polarizer = p;

  std::vector<char> inside;
  const long m = static_cast<long>(std::ceil(1.0 / pitch)) + 1;
  for (long j = -m; j < m; ++j) {
    for (long i = -m; i < m; ++i) {
      const double x = (i + 0.5) * pitch;
      const double y = (j + 0.5) * pitch;
      if (x * x + y * y >= 1.0) continue;
      const PointD z(x, y);
      if (!p.contains(z)) continue;
      const PointD zr = p.geodesic.reflect(z);
      const bool in_z = spec.contains(z);
      const bool in_zr = spec.contains(zr);
      if (!in_z && !in_zr) continue;
      const double w = cell_weight(z, pitch);
      const std::size_t k = grid->size();
      grid->nodes.push_back(z);
      grid->nodes.push_back(zr);
      grid->weights.push_back(w);
      grid->weights.push_back(w);
      grid->pairing.push_back(k + 1);
      grid->pairing.push_back(k);
      inside.push_back(in_z ? 1 : 0);
      inside.push_back(in_zr ? 1 : 0);
    }
  }

  DomainMask mask{grid, std::move(inside)};
  if (mask.count() < 16)
    throw std::runtime_error("build_paired_grid: too few nodes inside the domain");
  return {grid, std::move(mask)};
}

DomainMask polarize_mask(const DomainMask& m, const Polarizer& p) {
  require_pairing(*m.grid, p);
  DomainMask out{m.grid, std::vector<char>(m.inside.size(), 0)};
  for (std::size_t i = 0; i < m.inside.size(); ++i) {
    const std::size_t j = m.grid->pairing[i];
    if (p.contains(m.grid->nodes[i]))
      out.inside[i] = (m.inside[i] || m.inside[j]) ? 1 : 0;
    else
      out.inside[i] = (m.inside[i] && m.inside[j]) ? 1 : 0;
  }
  return out;
}

ScalarField polarize_field(const ScalarField& f, const Polarizer& p) {
  require_pairing(*f.grid, p);
  ScalarField out{f.grid, std::vector<double>(f.values.size(), 0.0)};
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const std::size_t j = f.grid->pairing[i];
    if (p.contains(f.grid->nodes[i]))
      out.values[i] = std::max(f.values[i], f.values[j]);
    else
      out.values[i] = std::min(f.values[i], f.values[j]);
  }
  return out;
}

DomainMask reflect_mask(const DomainMask& m) {
  if (!m.grid->paired())
    throw std::invalid_argument("reflect_mask requires a paired grid");
  DomainMask out{m.grid, std::vector<char>(m.inside.size(), 0)};
  for (std::size_t i = 0; i < m.inside.size(); ++i)
    out.inside[i] = m.inside[m.grid->pairing[i]];
  return out;
}

double symmetric_difference_measure(const DomainMask& a, const DomainMask& b) {
  if (a.grid != b.grid)
    throw std::invalid_argument("symmetric_difference_measure: grid mismatch");
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.inside.size(); ++i)
    if (bool(a.inside[i]) != bool(b.inside[i])) ++n;
  return double(n) * a.grid->pitch * a.grid->pitch;
}

double integrate(const ScalarField& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    sum += f.values[i] * f.grid->weights[i];
  return sum;
}

double l2_norm(const ScalarField& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    sum += f.values[i] * f.values[i] * f.grid->weights[i];
  return std::sqrt(sum);
}

}  // namespace hyplog
