#pragma once

#include "hyplog/operator.hpp"

namespace hyplog {

/// Full symmetric eigendecomposition, eigenvalues sorted descending with
/// matching orthonormal eigenvector columns.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
};

Spectrum eigen_decompose(const DiscreteOperator& op);

struct Eigenpair {
  double tau;
  ScalarField u;
};

/// Principal eigenpair: node values recovered as v_i / sqrt(w_i), L2-unit,
/// sign fixed so the mean is positive. Warns via the returned gap being
/// reported elsewhere; callers needing the gap use eigen_decompose.
Eigenpair principal_eigenpair(const DiscreteOperator& op);
Eigenpair principal_eigenpair(const DiscreteOperator& op, const Spectrum& spectrum);

/// Largest eigenvalue by Rayleigh-quotient power iteration on B.
/// Deterministic start vector; independent of eigen_decompose.
double top_eigenvalue(const DiscreteOperator& op, double rel_tol = 1e-13);

/// Power-iteration variant that also returns the eigenfield.
Eigenpair top_eigenpair(const DiscreteOperator& op, double rel_tol = 1e-13);

/// Independent 1D reference for rotation-invariant domains Delta_R(0):
/// largest eigenvalue of the n-point midpoint discretization of the
/// angular-averaged kernel (1/2) log(1/max(r,s)) with radial weights
/// 2 r dr / (1-r^2)^2.
double radial_oracle(double R, int n);

}  // namespace hyplog
