#pragma once

#include <Eigen/Dense>
#include <vector>

namespace felix {

/// Where the preference dynamics of a 2-player game ends up.
///   nash        — both players stay selfish (q -> 0)
///   altruist_1  — player 1 becomes fully prosocial, player 2 selfish
///   altruist_2  — mirror image
///   benevolent  — both become fully prosocial
enum class TwoPlayerOutcome { nash, altruist_1, altruist_2, benevolent };

const char* to_string(TwoPlayerOutcome o);

// Threshold 1 / (2 - q_other) shared by hawk-dove, ultimatum and
// coordination: a player's own-strategy preference flips once her q exceeds
// it. Increasing in q_other.
double altruism_threshold(double q_other);

// ---- Prisoners' dilemma (payoffs pi_i = s_{-i} - c s_i) -------------------

struct Pd2Classification {
  TwoPlayerOutcome label;
  Eigen::Vector2d limit_q;     // preference endpoint (cap stands in for 1)
  Eigen::Vector2d strategies;  // play at the endpoint (1 = cooperate)
};

// Region classification of the gradient dynamics started at (q1, q2):
// with a = min(q1,q2), b = max(q1,q2), the outcome is nash when
// c >= b(1-a)/(1-b), benevolent when c < a(1-b)/(1-a), and otherwise the
// asymmetric equilibrium where the higher-q player turns altruist.
// Boundary ties resolve toward the less prosocial label.
Pd2Classification pd2_classify(double q1, double q2, double c, double q_cap = 1.0);

// ---- Hawk-dove (pi_i = 1 + s_i - s_{-i} - 2 s_1 s_2) ----------------------

// Pure equilibria of the happiness game at fixed (q1, q2):
// {(0,1)} when q1 > 1/(2-q2), {(1,0)} when q2 > 1/(2-q1), both otherwise.
std::vector<Eigen::Vector2d> hawkdove_solve(double q1, double q2);

// ---- Ultimatum / dictator (s1 = share kept, s2 = accept flag) -------------

struct UltimatumSolution {
  double s1;  // share kept by the proposer
  double s2;  // responder acceptance (always 1)
  double u1, u2;
  TwoPlayerOutcome limit;  // preference endpoint (always asymmetric)
};

// refusable=false is the dictator variant; predictions coincide.
UltimatumSolution ultimatum_solve(double q1, double q2, bool refusable = true);

// ---- Coordination (pi_1 = (s1+s2) eps + s1 s2, pi_2 mirrored, s = +-1) ----

struct CoordinationResult {
  std::vector<Eigen::Vector2d> equilibria;  // always both coordinated profiles
  TwoPlayerOutcome limit;
};

CoordinationResult coordination_classify(double q1, double q2, double eps);

// Raw payoff functions (shared with the exhaustive best-response oracle).
Eigen::Vector2d pd2_payoffs(double s1, double s2, double c);
Eigen::Vector2d hawkdove_payoffs(double s1, double s2, double unused = 0.0);
Eigen::Vector2d ultimatum_payoffs(double s1, double s2, double unused = 0.0);
Eigen::Vector2d coordination_payoffs(double s1, double s2, double eps);

}  // namespace felix
