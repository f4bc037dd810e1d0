#include "felix/game.hpp"

namespace felix {

std::vector<std::pair<int, double>> Game::payoff_delta(const SocialGraph& g,
                                                       const Eigen::VectorXd& profile,
                                                       int node, double value) const {
  Eigen::VectorXd changed = profile;
  changed[node] = value;
  const Eigen::VectorXd before = payoffs(g, profile);
  const Eigen::VectorXd after = payoffs(g, changed);
  std::vector<std::pair<int, double>> delta;
  for (int i = 0; i < g.size(); ++i)
    if (after[i] != before[i]) delta.emplace_back(i, after[i] - before[i]);
  return delta;
}

}  // namespace felix
