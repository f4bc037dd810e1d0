#pragma once

#include <Eigen/Dense>

#include "felix/graph.hpp"
#include "felix/prosociality.hpp"

namespace felix {

/// Solution of the happiness fixed point
///   u_i = (1 - q_i) pi_i + sum_{j in N(i)} p(i,j) u_j,
/// i.e. (I - P) u = diag(1 - q) pi. b_diag carries the diagonal of
/// B = (I - P)^{-1}, the per-node reciprocity factor (>= 1).
struct HappinessSolution {
  Eigen::VectorXd u;
  Eigen::VectorXd b_diag;
  double residual = 0.0;  // max-norm of (I-P)u - diag(1-q) pi
};

// Residual contract shared by every solve path: the max-norm residual never
// exceeds kResidualTol * max(1, |pi|_inf).
inline constexpr double kResidualTol = 1e-10;

// B = (I - P)^{-1}. Requires every row total of P to stay below 1; checked
// and rejected otherwise. The result satisfies (I-P)B = I within 1e-10
// entrywise (a Newton refinement pass runs if plain inversion misses that).
Eigen::MatrixXd reciprocity_matrix(const Eigen::MatrixXd& weights);

HappinessSolution solve_happiness(const SocialGraph& g, const ProsocialityState& state,
                                  const Eigen::VectorXd& payoffs);

// d u_k / d p(i,j) = b_{k,i} (u_j - pi_i). (i,j) must be an edge.
double selective_gradient(const SocialGraph& g, const ProsocialityState& state,
                          const Eigen::VectorXd& payoffs, const HappinessSolution& sol,
                          int k, int i, int j);

struct GeneralizedGradient {
  double value = 0.0;
  bool isolated = false;  // k_i = 0: gradient defined as 0
};

// d u_i / d q_i = b_{i,i} ( mean_{j in N(i)} u_j - pi_i ), generalized mode.
GeneralizedGradient generalized_gradient(const SocialGraph& g, const ProsocialityState& state,
                                         const Eigen::VectorXd& payoffs,
                                         const HappinessSolution& sol, int i);

// All own-trait gradients at once (isolated nodes get 0).
Eigen::VectorXd generalized_gradients(const SocialGraph& g, const HappinessSolution& sol,
                                      const Eigen::VectorXd& payoffs);

/// Cached (I - P)^{-1} for one prosociality state. Lets equilibrium sweeps
/// and dynamics steps evaluate many payoff vectors against the same state
/// without refactoring; values agree with solve_happiness by construction
/// (u = B diag(1-q) pi is the same linear map).
class HappinessOperator {
 public:
  HappinessOperator(const SocialGraph& g, const ProsocialityState& state);

  const Eigen::MatrixXd& reciprocity() const { return b_; }
  const Eigen::VectorXd& payoff_share() const { return share_; }  // 1 - q
  Eigen::VectorXd b_diag() const { return b_.diagonal(); }

  Eigen::VectorXd happiness(const Eigen::VectorXd& payoffs) const {
    return b_ * share_.cwiseProduct(payoffs);
  }
  double happiness_of(int i, const Eigen::VectorXd& payoffs) const {
    return b_.row(i).dot(share_.cwiseProduct(payoffs));
  }

 private:
  Eigen::MatrixXd b_;
  Eigen::VectorXd share_;
};

}  // namespace felix
