#include "felix/netgen.hpp"

#include <stdexcept>

#include "felix/rng.hpp"

namespace felix {

SocialGraph make_complete(int n) {
  if (n < 2) throw std::invalid_argument("make_complete: need n >= 2");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return SocialGraph::from_edges(n, edges);
}

SocialGraph make_er(int n, double mean_degree, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("make_er: need n >= 2");
  if (mean_degree <= 0.0 || mean_degree >= n)
    throw std::invalid_argument("make_er: mean_degree must be in (0, n)");
  const double p = mean_degree / (n - 1);
  rng::Stream stream(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (stream.uniform() < p) edges.emplace_back(i, j);
  return SocialGraph::from_edges(n, edges);
}

SocialGraph make_graph(const GraphSpec& spec) {
  switch (spec.kind) {
    case GraphSpec::Kind::complete:
      return make_complete(spec.n);
    case GraphSpec::Kind::erdos_renyi:
      return make_er(spec.n, spec.mean_degree, spec.seed);
  }
  throw std::invalid_argument("make_graph: unknown kind");
}

std::vector<int> isolated_nodes(const SocialGraph& g) {
  std::vector<int> out;
  for (int i = 0; i < g.size(); ++i)
    if (g.degree(i) == 0) out.push_back(i);
  return out;
}

}  // namespace felix
