#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cforge/complex.hpp"
#include "cforge/face.hpp"

namespace cforge {

/// Undirected simple graph whose nodes are faces, stored in compressed
/// adjacency form. For a dual graph the nodes are the d-faces of a complex and
/// two nodes are adjacent iff the faces share exactly d vertices.
class DualGraph {
 public:
  using Node = std::uint32_t;

  DualGraph() = default;
  /// Builds from an edge list; duplicate edges are merged. Throws
  /// InvalidParams on self-loops or out-of-range endpoints.
  DualGraph(std::vector<Face> nodes, const std::vector<std::pair<Node, Node>>& edges);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return neighbors_.size() / 2; }
  const std::vector<Face>& nodes() const { return nodes_; }
  const Face& face(Node i) const { return nodes_[i]; }
  std::span<const Node> neighbors(Node i) const {
    return {neighbors_.data() + offsets_[i], neighbors_.data() + offsets_[i + 1]};
  }
  std::size_t degree(Node i) const { return offsets_[i + 1] - offsets_[i]; }
  bool adjacent(Node a, Node b) const;

 private:
  std::vector<Face> nodes_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Node> neighbors_;  // each list sorted
};

/// Dual graph of the d-faces of `complex`, built by hashing every (d-1)-subface
/// to its incident d-faces. Throws EmptyDual when there are no d-faces.
DualGraph build_dual(const SimplicialComplex& complex, int d);

/// BFS distances from `source`; unreachable nodes get -1.
std::vector<int> bfs_distances(const DualGraph& g, DualGraph::Node source);

bool is_connected(const DualGraph& g);

/// Component label per node, labels 0..k-1 in order of first appearance.
std::vector<int> connected_components(const DualGraph& g);

/// Graph diameter. Throws NotStronglyConnected if g is disconnected and
/// EmptyDual if g has no nodes.
int diameter(const DualGraph& g);

/// The dual graph of the d-faces of `complex` is connected. Complexes without
/// d-faces are not strongly connected.
bool is_strongly_connected(const SimplicialComplex& complex, int d);

/// g is a path: connected, two endpoints of degree 1, every other node of
/// degree 2. A single node counts as the path of length 0.
bool is_induced_path(const DualGraph& g);

/// Vertex connectivity by Menger: minimum over non-adjacent pairs of the
/// maximum number of internally disjoint paths. Complete graphs give
/// node_count - 1; disconnected graphs give 0.
int vertex_connectivity(const DualGraph& g);

/// Number of internally vertex-disjoint s-t paths, stopping early once
/// `limit` paths are found. s and t must be distinct and non-adjacent.
int local_vertex_connectivity(const DualGraph& g, DualGraph::Node s, DualGraph::Node t, int limit);

/// Upper bound on the diameter of a K-connected graph on num_nodes nodes:
/// floor((num_nodes - 2) / K) + 1.
std::int64_t caccetta_smyth_bound(std::int64_t num_nodes, std::int64_t K);

/// J(n, k): k-subsets of [n], adjacent when they share k-1 elements. Built by
/// direct pairwise comparison, independent of build_dual.
DualGraph johnson_graph(Vertex n, int k);

/// Exact length (in edges) of the longest induced path, by exhaustive DFS.
/// Throws RefusedSize when the graph has more than node_limit nodes.
int longest_induced_path_bruteforce(const DualGraph& g, std::size_t node_limit = 16);

}  // namespace cforge
