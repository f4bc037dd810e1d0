#include "felix/prosociality.hpp"

#include <stdexcept>

namespace felix {

namespace {

void check_q_max(double q_max) {
  if (!(q_max > 0.0 && q_max < 1.0))
    throw std::invalid_argument("ProsocialityState: q_max must lie in (0, 1)");
}

}  // namespace

ProsocialityState ProsocialityState::selective(const SocialGraph& g, Eigen::MatrixXd weights,
                                               double q_max) {
  check_q_max(q_max);
  const int n = g.size();
  if (weights.rows() != n || weights.cols() != n)
    throw std::invalid_argument("ProsocialityState: weight matrix shape mismatch");
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      const double w = weights(i, j);
      if (w < 0.0) throw std::invalid_argument("ProsocialityState: negative weight");
      if (w != 0.0 && (i == j || !g.has_edge(i, j)))
        throw std::invalid_argument("ProsocialityState: weight off the neighborhood");
      row += w;
    }
    if (row > q_max + 1e-15)
      throw std::invalid_argument("ProsocialityState: row total exceeds q_max");
  }
  ProsocialityState s;
  s.mode_ = Mode::selective;
  s.n_ = n;
  s.q_max_ = q_max;
  s.weights_ = std::move(weights);
  return s;
}

ProsocialityState ProsocialityState::generalized(const SocialGraph& g, Eigen::VectorXd q,
                                                 double q_max) {
  check_q_max(q_max);
  const int n = g.size();
  if (q.size() != n) throw std::invalid_argument("ProsocialityState: q length mismatch");
  for (int i = 0; i < n; ++i)
    if (q[i] < 0.0 || q[i] > q_max + 1e-15)
      throw std::invalid_argument("ProsocialityState: q_i outside [0, q_max]");
  ProsocialityState s;
  s.mode_ = Mode::generalized;
  s.n_ = n;
  s.q_max_ = q_max;
  s.q_ = std::move(q);
  return s;
}

ProsocialityState ProsocialityState::zero(const SocialGraph& g, double q_max) {
  return selective(g, Eigen::MatrixXd::Zero(g.size(), g.size()), q_max);
}

Eigen::MatrixXd ProsocialityState::weight_matrix(const SocialGraph& g) const {
  if (mode_ == Mode::selective) return weights_;
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n_, n_);
  for (int i = 0; i < n_; ++i) {
    const int k = g.degree(i);
    if (k == 0) continue;
    const double p = q_[i] / k;
    for (int j : g.neighbors(i)) w(i, j) = p;
  }
  return w;
}

Eigen::VectorXd ProsocialityState::totals(const SocialGraph& g) const {
  if (mode_ == Mode::generalized) {
    Eigen::VectorXd t = q_;
    // An isolated node has nowhere to direct its weight: effective total 0.
    for (int i = 0; i < n_; ++i)
      if (g.degree(i) == 0) t[i] = 0.0;
    return t;
  }
  return weights_.rowwise().sum();
}

const Eigen::VectorXd& ProsocialityState::q() const {
  if (mode_ != Mode::generalized)
    throw std::logic_error("ProsocialityState: q() requires generalized mode");
  return q_;
}

const Eigen::MatrixXd& ProsocialityState::weights() const {
  if (mode_ != Mode::selective)
    throw std::logic_error("ProsocialityState: weights() requires selective mode");
  return weights_;
}

}  // namespace felix
