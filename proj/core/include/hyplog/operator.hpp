#pragma once

#include <string>

#include <Eigen/Dense>

#include "hyplog/domain.hpp"

namespace hyplog {

/// K(z,w) = (1/2) log(1/[z,w]); strictly positive for distinct points.
/// Throws on coincident inputs; cell self-interaction goes through
/// diagonal_value instead.
double kernel(PointD z, PointD w);

/// Regularized self-interaction for a cell of hyperbolic weight w: the mean
/// of log(1/[z,.]) over the pseudo-hyperbolic disk of equal measure,
/// F(rho)/tau_rho with rho = sqrt(w/(1+w)),
/// F(rho) = rho^2 log(1/rho)/(1-rho^2) - (1/2) log(1-rho^2).
double diagonal_value(double weight);

/// Symmetrized Nystrom matrix B_ij = sqrt(w_i) K(z_i,z_j) sqrt(w_j) over
/// mask-inside nodes, with the regularized diagonal.
struct DiscreteOperator {
  GridPtr grid;
  std::vector<std::size_t> node_index;  // row -> grid node
  std::vector<PointD> points;
  std::vector<double> weights;
  Eigen::MatrixXd b;

  Eigen::Index size() const { return b.rows(); }
};

DiscreteOperator assemble(const QuadratureGrid& grid, const DomainMask& mask);

inline DiscreteOperator assemble(const GriddedDomain& dom) {
  return assemble(*dom.grid, dom.mask);
}

/// Potential sum_j K(z, z_j) f_j w_j; defined anywhere in the disk, with the
/// regularized diagonal when z coincides with a node.
double apply_potential(const ScalarField& f, PointD z);

/// Bilinear energy E(u,v) = sum_ij K(z_i,z_j) u_i v_j w_i w_j with the
/// regularized diagonal; E(u,u)/|u|^2 is the Rayleigh quotient of B.
double energy(const ScalarField& u, const ScalarField& v);

/// Debug dump: little-endian int64 size header then row-major doubles.
void dump_operator(const DiscreteOperator& op, const std::string& path);

}  // namespace hyplog
