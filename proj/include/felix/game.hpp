#pragma once

#include <Eigen/Dense>
#include <span>
#include <utility>
#include <vector>

#include "felix/graph.hpp"

namespace felix {

/// A game with a finite per-node strategy menu. Strategies are encoded as
/// doubles so binary (0/1), signed (+-1) and discretized continuous menus all
/// fit one profile vector.
class Game {
 public:
  virtual ~Game() = default;

  virtual std::span<const double> strategies(int node) const = 0;

  virtual Eigen::VectorXd payoffs(const SocialGraph& g, const Eigen::VectorXd& profile) const = 0;

  // Payoff changes caused by `node` switching to `value`, as (node, delta)
  // pairs. The default recomputes both profiles; games with local payoff
  // structure override with an O(degree) version.
  virtual std::vector<std::pair<int, double>> payoff_delta(const SocialGraph& g,
                                                           const Eigen::VectorXd& profile,
                                                           int node, double value) const;
};

/// Two-node game defined by explicit payoff functions; used for the 2x2
/// catalog (prisoners' dilemma, hawk-dove, ultimatum, coordination).
class TwoPlayerGame : public Game {
 public:
  using PayoffFn = Eigen::Vector2d (*)(double s1, double s2, double param);

  TwoPlayerGame(PayoffFn fn, double param, std::vector<double> menu1, std::vector<double> menu2)
      : fn_(fn), param_(param), menus_{std::move(menu1), std::move(menu2)} {}

  std::span<const double> strategies(int node) const override { return menus_[node]; }

  Eigen::VectorXd payoffs(const SocialGraph&, const Eigen::VectorXd& profile) const override {
    return fn_(profile[0], profile[1], param_);
  }

 private:
  PayoffFn fn_;
  double param_;
  std::vector<double> menus_[2];
};

}  // namespace felix
