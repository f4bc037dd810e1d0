#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <utility>
#include <vector>

namespace felix {

/// Undirected interaction graph. Nodes are 0..n-1; edges are unordered pairs
/// with no self-loops. Neighbor lists are kept sorted ascending so that every
/// traversal order is deterministic.
class SocialGraph {
 public:
  SocialGraph() = default;

  // Builds from an edge list; duplicates are rejected, (i,j) and (j,i) count
  // as the same edge. Throws std::invalid_argument on self-loops or
  // out-of-range endpoints.
  static SocialGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  const std::vector<int>& neighbors(int i) const { return adjacency_[i]; }
  int degree(int i) const { return static_cast<int>(adjacency_[i].size()); }
  bool has_edge(int i, int j) const;

  // Dense 0/1 adjacency matrix (built on first use, then cached).
  const Eigen::MatrixXd& adjacency_matrix() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;        // i < j, lexicographic
  std::vector<std::vector<int>> adjacency_;       // sorted ascending
  mutable Eigen::MatrixXd adjacency_matrix_;      // lazily built
  mutable bool have_matrix_ = false;
};

// Edge-list text format: header line "n <node_count>", then one "i j" line
// per edge, zero-indexed, ascending.
void write_edge_list(const SocialGraph& g, std::ostream& out);
SocialGraph read_edge_list(std::istream& in);

}  // namespace felix
