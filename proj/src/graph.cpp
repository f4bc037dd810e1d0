#include "felix/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace felix {

SocialGraph SocialGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("SocialGraph: negative node count");
  SocialGraph g;
  g.n_ = n;
  g.adjacency_.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a == b) throw std::invalid_argument("SocialGraph: self-loop rejected");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::invalid_argument("SocialGraph: edge endpoint out of range");
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second)
      throw std::invalid_argument("SocialGraph: duplicate edge");
  }
  for (auto [a, b] : seen) {
    g.edges_.emplace_back(a, b);
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
  }
  for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());
  return g;
}

bool SocialGraph::has_edge(int i, int j) const {
  if (i == j) return false;
  const auto& nb = adjacency_[i];
  return std::binary_search(nb.begin(), nb.end(), j);
}

const Eigen::MatrixXd& SocialGraph::adjacency_matrix() const {
  if (!have_matrix_) {
    adjacency_matrix_ = Eigen::MatrixXd::Zero(n_, n_);
    for (auto [a, b] : edges_) {
      adjacency_matrix_(a, b) = 1.0;
      adjacency_matrix_(b, a) = 1.0;
    }
    have_matrix_ = true;
  }
  return adjacency_matrix_;
}

void write_edge_list(const SocialGraph& g, std::ostream& out) {
  out << "n " << g.size() << "\n";
  for (auto [a, b] : g.edges()) out << a << " " << b << "\n";
}

SocialGraph read_edge_list(std::istream& in) {
  std::string tag;
  int n = 0;
  if (!(in >> tag >> n) || tag != "n")
    throw std::invalid_argument("edge list: expected header \"n <node_count>\"");
  std::vector<std::pair<int, int>> edges;
  int a, b;
  while (in >> a >> b) edges.emplace_back(a, b);
  if (!in.eof() && in.fail()) throw std::invalid_argument("edge list: malformed edge line");
  return SocialGraph::from_edges(n, edges);
}

}  // namespace felix
