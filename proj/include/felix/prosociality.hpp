#pragma once

#include <Eigen/Dense>

#include "felix/graph.hpp"

namespace felix {

inline constexpr double kDefaultQMax = 1.0 - 1e-6;

/// How much each individual weights neighbors' happiness. Two parametrizations:
///   selective    — independent weight p(i,j) >= 0 per directed edge,
///   generalized  — a single trait q_i per node, spread uniformly over the
///                  neighborhood as p(i,j) = q_i / k_i.
/// In both modes the row total q_i = sum_j p(i,j) is capped at q_max < 1,
/// which keeps the happiness system strictly diagonally dominant.
class ProsocialityState {
 public:
  enum class Mode { selective, generalized };

  static ProsocialityState selective(const SocialGraph& g, Eigen::MatrixXd weights,
                                     double q_max = kDefaultQMax);
  static ProsocialityState generalized(const SocialGraph& g, Eigen::VectorXd q,
                                       double q_max = kDefaultQMax);
  // All-zero selective state (the selfish baseline).
  static ProsocialityState zero(const SocialGraph& g, double q_max = kDefaultQMax);

  Mode mode() const { return mode_; }
  double q_max() const { return q_max_; }
  int size() const { return n_; }

  // Dense weight matrix P; in generalized mode materialized from q and the
  // graph. Entries vanish off-neighborhood and on the diagonal.
  Eigen::MatrixXd weight_matrix(const SocialGraph& g) const;

  // Row totals q_i.
  Eigen::VectorXd totals(const SocialGraph& g) const;

  // Generalized-mode trait vector (throws in selective mode).
  const Eigen::VectorXd& q() const;
  // Selective-mode weights (throws in generalized mode).
  const Eigen::MatrixXd& weights() const;

 private:
  Mode mode_ = Mode::generalized;
  int n_ = 0;
  double q_max_ = kDefaultQMax;
  Eigen::MatrixXd weights_;  // selective
  Eigen::VectorXd q_;        // generalized
};

}  // namespace felix
