#pragma once

#include <cstdint>
#include <vector>

#include "felix/graph.hpp"

namespace felix {

struct GraphSpec {
  enum class Kind { complete, erdos_renyi };
  Kind kind = Kind::complete;
  int n = 0;
  double mean_degree = 0.0;   // ER only
  std::uint64_t seed = 0;     // ER only
};

// Complete graph on n >= 2 nodes.
SocialGraph make_complete(int n);

// Erdos-Renyi G(n, p) with p = mean_degree / (n - 1). Pairs are visited in a
// fixed lexicographic order, so the edge set is a pure function of
// (n, mean_degree, seed). Isolated nodes are kept.
SocialGraph make_er(int n, double mean_degree, std::uint64_t seed);

SocialGraph make_graph(const GraphSpec& spec);

std::vector<int> isolated_nodes(const SocialGraph& g);

}  // namespace felix
