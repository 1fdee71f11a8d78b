#include "hyplog/operator.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>

namespace hyplog {

namespace {

constexpr double kCoincidenceTol = 1e-14;

}  // namespace

double kernel(PointD z, PointD w) {
  const double d = pseudo_distance(z, w);
  if (d == 0.0)
    throw std::invalid_argument("kernel: coincident points are singular");
  return 0.5 * std::log(1.0 / d);
}

double diagonal_value(double weight) {
  if (!(weight > 0.0))
    throw std::invalid_argument("diagonal_value: weight must be positive");
  const double rho2 = weight / (1.0 + weight);
  const double rho = std::sqrt(rho2);
  const double f = rho2 * std::log(1.0 / rho) / (1.0 - rho2) -
                   0.5 * std::log1p(-rho2);
  return f / weight;  // tau_rho = rho^2/(1-rho^2) = weight
}

DiscreteOperator assemble(const QuadratureGrid& grid, const DomainMask& mask) {
  DiscreteOperator op;
  op.grid = mask.grid;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!mask.inside[i]) continue;
    op.node_index.push_back(i);
    op.points.push_back(grid.nodes[i]);
    op.weights.push_back(grid.weights[i]);
  }
  const Eigen::Index n = static_cast<Eigen::Index>(op.points.size());
  if (n < 16) throw std::runtime_error("assemble: too few inside nodes");

  std::vector<double> sqw(n);
  for (Eigen::Index i = 0; i < n; ++i) sqw[i] = std::sqrt(op.weights[i]);

  op.b.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    op.b(i, i) = op.weights[i] * diagonal_value(op.weights[i]);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double v = sqw[i] * kernel(op.points[i], op.points[j]) * sqw[j];
      op.b(i, j) = v;
      op.b(j, i) = v;
    }
  }
  return op;
}

double apply_potential(const ScalarField& f, PointD z) {
  double sum = 0.0;
  const QuadratureGrid& grid = *f.grid;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double v = f.values[j];
    if (v == 0.0) continue;
    const double w = grid.weights[j];
    const double d = pseudo_distance(z, grid.nodes[j]);
    const double k = d < kCoincidenceTol ? diagonal_value(w) : 0.5 * std::log(1.0 / d);
    sum += k * v * w;
  }
  return sum;
}

double energy(const ScalarField& u, const ScalarField& v) {
  if (u.grid != v.grid) throw std::invalid_argument("energy: grid mismatch");
  const QuadratureGrid& grid = *u.grid;

  std::vector<std::size_t> iu, iv;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (u.values[i] != 0.0) iu.push_back(i);
    if (v.values[i] != 0.0) iv.push_back(i);
  }

  double sum = 0.0;
  for (std::size_t a : iu) {
    const double ua = u.values[a] * grid.weights[a];
    for (std::size_t b : iv) {
      const double d = pseudo_distance(grid.nodes[a], grid.nodes[b]);
      const double k =
          d < kCoincidenceTol ? diagonal_value(grid.weights[a]) : 0.5 * std::log(1.0 / d);
      sum += k * ua * v.values[b] * grid.weights[b];
    }
  }
  return sum;
}

void dump_operator(const DiscreteOperator& op, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("dump_operator: cannot open " + path);
  const std::int64_t n = op.b.rows();
  out.write(reinterpret_cast<const char*>(&n), sizeof(n));
  for (Eigen::Index i = 0; i < op.b.rows(); ++i)
    out.write(reinterpret_cast<const char*>(op.b.row(i).eval().data()),
              static_cast<std::streamsize>(sizeof(double) * op.b.cols()));
}

}  // namespace hyplog
