#include "felix/happiness.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <stdexcept>

namespace felix {

namespace {

constexpr int kDirectLimit = 512;

void check_row_totals(const Eigen::MatrixXd& weights) {
  const Eigen::VectorXd totals = weights.rowwise().sum();
  if ((weights.array() < 0.0).any())
    throw std::invalid_argument("reciprocity: negative weight");
  for (Eigen::Index i = 0; i < totals.size(); ++i)
    if (totals[i] >= 1.0)
      throw std::invalid_argument("reciprocity: row total q_i >= 1, system may be singular");
}

double residual_norm(const Eigen::MatrixXd& weights, const Eigen::VectorXd& u,
                     const Eigen::VectorXd& rhs) {
  return (u - weights * u - rhs).cwiseAbs().maxCoeff();
}

double residual_bound(const Eigen::VectorXd& payoffs) {
  return kResidualTol * std::max(1.0, payoffs.cwiseAbs().maxCoeff());
}

Eigen::SparseMatrix<double> system_matrix_sparse(const Eigen::MatrixXd& weights) {
  const int n = static_cast<int>(weights.rows());
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(n) * 8);
  for (int i = 0; i < n; ++i) {
    trip.emplace_back(i, i, 1.0 - weights(i, i));
    for (int j = 0; j < n; ++j)
      if (j != i && weights(i, j) != 0.0) trip.emplace_back(i, j, -weights(i, j));
  }
  Eigen::SparseMatrix<double> a(n, n);
  a.setFromTriplets(trip.begin(), trip.end());
  return a;
}

// Iterative path for large systems; falls back to dense LU when the
// residual contract is not met.
HappinessSolution solve_iterative(const Eigen::MatrixXd& weights, const Eigen::VectorXd& share,
                                  const Eigen::VectorXd& payoffs) {
  const int n = static_cast<int>(weights.rows());
  const Eigen::SparseMatrix<double> a = system_matrix_sparse(weights);
  Eigen::BiCGSTAB<Eigen::SparseMatrix<double>> solver;
  solver.setTolerance(1e-14);
  solver.setMaxIterations(40 * n);
  solver.compute(a);

  HappinessSolution sol;
  const Eigen::VectorXd rhs = share.cwiseProduct(payoffs);
  sol.u = solver.solve(rhs);
  sol.residual = residual_norm(weights, sol.u, rhs);
  if (!(sol.residual <= residual_bound(payoffs))) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(Eigen::MatrixXd::Identity(n, n) - weights);
    sol.u = lu.solve(rhs);
    sol.residual = residual_norm(weights, sol.u, rhs);
  }

  // Diagonal of B via transposed unit solves: b_{i,i} = x_i with A^T x = e_i.
  Eigen::BiCGSTAB<Eigen::SparseMatrix<double>> tsolver;
  const Eigen::SparseMatrix<double> at = a.transpose();
  tsolver.setTolerance(1e-14);
  tsolver.setMaxIterations(40 * n);
  tsolver.compute(at);
  sol.b_diag.resize(n);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    e[i] = 1.0;
    sol.b_diag[i] = tsolver.solve(e)[i];
    e[i] = 0.0;
  }
  return sol;
}

}  // namespace

Eigen::MatrixXd reciprocity_matrix(const Eigen::MatrixXd& weights) {
  check_row_totals(weights);
  const int n = static_cast<int>(weights.rows());
  const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n) - weights;
  Eigen::MatrixXd b = a.partialPivLu().inverse();
  // One Newton pass if inversion fell short of the entrywise contract.
  Eigen::MatrixXd err = Eigen::MatrixXd::Identity(n, n) - a * b;
  if (err.cwiseAbs().maxCoeff() > 1e-10) {
    b += b * err;
  }
  return b;
}

HappinessSolution solve_happiness(const SocialGraph& g, const ProsocialityState& state,
                                  const Eigen::VectorXd& payoffs) {
  const int n = g.size();
  if (payoffs.size() != n) throw std::invalid_argument("solve_happiness: payoff length mismatch");
  const Eigen::MatrixXd weights = state.weight_matrix(g);
  check_row_totals(weights);
  const Eigen::VectorXd share = Eigen::VectorXd::Ones(n) - state.totals(g);

  if (n > kDirectLimit) return solve_iterative(weights, share, payoffs);

  const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n) - weights;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  HappinessSolution sol;
  const Eigen::VectorXd rhs = share.cwiseProduct(payoffs);
  sol.u = lu.solve(rhs);
  const double bound = residual_bound(payoffs);
  sol.residual = residual_norm(weights, sol.u, rhs);
  for (int pass = 0; pass < 2 && sol.residual > bound; ++pass) {
    sol.u += lu.solve(rhs - a * sol.u);
    sol.residual = residual_norm(weights, sol.u, rhs);
  }
  Eigen::MatrixXd b = lu.inverse();
  Eigen::MatrixXd err = Eigen::MatrixXd::Identity(n, n) - a * b;
  if (err.cwiseAbs().maxCoeff() > 1e-10) b += b * err;
  sol.b_diag = b.diagonal();
  return sol;
}

double selective_gradient(const SocialGraph& g, const ProsocialityState& state,
                          const Eigen::VectorXd& payoffs, const HappinessSolution& sol,
                          int k, int i, int j) {
  if (!g.has_edge(i, j))
    throw std::invalid_argument("selective_gradient: (i,j) is not an edge");
  double b_ki;
  if (k == i) {
    b_ki = sol.b_diag[i];
  } else {
    // b_{k,i} = x_i with (I - P)^T x = e_k.
    const Eigen::MatrixXd weights = state.weight_matrix(g);
    const int n = g.size();
    Eigen::MatrixXd at = (Eigen::MatrixXd::Identity(n, n) - weights).transpose();
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[k] = 1.0;
    b_ki = at.partialPivLu().solve(e)[i];
  }
  return b_ki * (sol.u[j] - payoffs[i]);
}

GeneralizedGradient generalized_gradient(const SocialGraph& g, const ProsocialityState& state,
                                         const Eigen::VectorXd& payoffs,
                                         const HappinessSolution& sol, int i) {
  (void)state;
  GeneralizedGradient out;
  const int k = g.degree(i);
  if (k == 0) {
    out.isolated = true;
    return out;
  }
  double mean = 0.0;
  for (int j : g.neighbors(i)) mean += sol.u[j];
  mean /= k;
  out.value = sol.b_diag[i] * (mean - payoffs[i]);
  return out;
}

Eigen::VectorXd generalized_gradients(const SocialGraph& g, const HappinessSolution& sol,
                                      const Eigen::VectorXd& payoffs) {
  const int n = g.size();
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    const int k = g.degree(i);
    if (k == 0) continue;
    double mean = 0.0;
    for (int j : g.neighbors(i)) mean += sol.u[j];
    grad[i] = sol.b_diag[i] * (mean / k - payoffs[i]);
  }
  return grad;
}

HappinessOperator::HappinessOperator(const SocialGraph& g, const ProsocialityState& state) {
  b_ = reciprocity_matrix(state.weight_matrix(g));
  share_ = Eigen::VectorXd::Ones(g.size()) - state.totals(g);
}

}  // namespace felix
