#include "hyplog/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace hyplog {

namespace {

ScalarField field_from_vector(const DiscreteOperator& op,
                              const Eigen::VectorXd& v) {
  ScalarField u{op.grid, std::vector<double>(op.grid->size(), 0.0)};
  double mean = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    mean += v[i] / std::sqrt(op.weights[i]) * op.weights[i];
  const double sign = mean >= 0.0 ? 1.0 : -1.0;
  const double scale = sign / v.norm();  // |u|_{L2}^2 = |v|^2
  for (Eigen::Index i = 0; i < v.size(); ++i)
    u.values[op.node_index[i]] = scale * v[i] / std::sqrt(op.weights[i]);
  return u;
}

Eigen::VectorXd power_iterate(const DiscreteOperator& op, double rel_tol,
                              double* eigenvalue) {
  const Eigen::Index n = op.size();
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n).normalized();
  double lambda = 0.0;
  for (int it = 0; it < 20000; ++it) {
    Eigen::VectorXd bv = op.b * v;
    const double next = v.dot(bv);
    const double norm = bv.norm();
    if (norm == 0.0) break;
    v = bv / norm;
    if (std::abs(next - lambda) <= rel_tol * std::abs(next) && it > 2) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  *eigenvalue = lambda;
  return v;
}

}  // namespace

Spectrum eigen_decompose(const DiscreteOperator& op) {
  if (!op.b.allFinite())
    throw std::invalid_argument("eigen_decompose: non-finite matrix entries");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op.b);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigen_decompose: eigensolver failed");

  // Eigen returns ascending order; flip to descending.
  const Eigen::Index n = op.size();
  Spectrum s;
  s.eigenvalues = solver.eigenvalues().reverse();
  s.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k)
    s.eigenvectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  return s;
}

Eigenpair principal_eigenpair(const DiscreteOperator& op) {
  return principal_eigenpair(op, eigen_decompose(op));
}

Eigenpair principal_eigenpair(const DiscreteOperator& op, const Spectrum& s) {
  return {s.eigenvalues[0], field_from_vector(op, s.eigenvectors.col(0))};
}

double top_eigenvalue(const DiscreteOperator& op, double rel_tol) {
  double lambda = 0.0;
  power_iterate(op, rel_tol, &lambda);
  return lambda;
}

Eigenpair top_eigenpair(const DiscreteOperator& op, double rel_tol) {
  double lambda = 0.0;
  const Eigen::VectorXd v = power_iterate(op, rel_tol, &lambda);
  return {lambda, field_from_vector(op, v)};
}

double radial_oracle(double R, int n) {
  if (!(R > 0.0 && R < 1.0))
    throw std::invalid_argument("radial_oracle: R must lie in (0,1)");
  if (n < 32) throw std::invalid_argument("radial_oracle: need n >= 32");

  const double dr = R / n;
  Eigen::VectorXd r(n), w(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 0.5) * dr;
    const double d = 1.0 - r[i] * r[i];
    w[i] = 2.0 * r[i] * dr / (d * d);
  }
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = std::sqrt(w[i]) * 0.5 * std::log(1.0 / std::max(r[i], r[j])) *
                std::sqrt(w[j]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  return solver.eigenvalues().maxCoeff();
}

}  // namespace hyplog
