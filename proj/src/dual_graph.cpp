#include "cforge/dual_graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <string>
#include <tuple>
#include <unordered_map>

#include "cforge/errors.hpp"

namespace cforge {

DualGraph::DualGraph(std::vector<Face> nodes, const std::vector<std::pair<Node, Node>>& edges)
    : nodes_(std::move(nodes)) {
  const std::size_t n = nodes_.size();
  std::vector<std::vector<Node>> adj(n);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw InvalidParams("edge endpoint out of range");
    if (a == b) throw InvalidParams("self-loop at node " + std::to_string(a));
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(adj[i].begin(), adj[i].end());
    adj[i].erase(std::unique(adj[i].begin(), adj[i].end()), adj[i].end());
    offsets_[i + 1] = offsets_[i] + adj[i].size();
  }
  neighbors_.reserve(offsets_[n]);
  for (const auto& list : adj) neighbors_.insert(neighbors_.end(), list.begin(), list.end());
}

bool DualGraph::adjacent(Node a, Node b) const {
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

DualGraph build_dual(const SimplicialComplex& complex, int d) {
  if (d < 0) throw InvalidParams("dimension must be non-negative");
  std::vector<Face> nodes = k_faces(complex, d);
  if (nodes.empty()) throw EmptyDual("complex has no " + std::to_string(d) + "-faces");

  std::unordered_map<Face, std::vector<DualGraph::Node>, FaceHash> incident;
  incident.reserve(nodes.size() * (d + 1));
  for (DualGraph::Node i = 0; i < nodes.size(); ++i) {
    for_each_subface(nodes[i], d, [&](const Face& ridge) { incident[ridge].push_back(i); });
  }
  std::vector<std::pair<DualGraph::Node, DualGraph::Node>> edges;
  for (const auto& [ridge, cofaces] : incident) {
    for (std::size_t a = 0; a < cofaces.size(); ++a) {
      for (std::size_t b = a + 1; b < cofaces.size(); ++b) edges.emplace_back(cofaces[a], cofaces[b]);
    }
  }
  return DualGraph(std::move(nodes), edges);
}

std::vector<int> bfs_distances(const DualGraph& g, DualGraph::Node source) {
  std::vector<int> dist(g.node_count(), -1);
  std::vector<DualGraph::Node> queue;
  queue.reserve(g.node_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto u = queue[head];
    for (auto w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> connected_components(const DualGraph& g) {
  std::vector<int> label(g.node_count(), -1);
  int next = 0;
  std::vector<DualGraph::Node> stack;
  for (DualGraph::Node s = 0; s < g.node_count(); ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto w : g.neighbors(u)) {
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const DualGraph& g) {
  if (g.node_count() == 0) return false;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int x) { return x < 0; });
}

int diameter(const DualGraph& g) {
  if (g.node_count() == 0) throw EmptyDual("diameter of an empty graph");
  auto first = bfs_distances(g, 0);
  if (std::any_of(first.begin(), first.end(), [](int x) { return x < 0; })) {
    throw NotStronglyConnected("dual graph is disconnected");
  }
  // Trees: the farthest node from any start is a diameter endpoint.
  if (g.edge_count() + 1 == g.node_count()) {
    auto far = static_cast<DualGraph::Node>(std::max_element(first.begin(), first.end()) - first.begin());
    auto second = bfs_distances(g, far);
    return *std::max_element(second.begin(), second.end());
  }
  int best = *std::max_element(first.begin(), first.end());
  for (DualGraph::Node s = 1; s < g.node_count(); ++s) {
    auto dist = bfs_distances(g, s);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

bool is_strongly_connected(const SimplicialComplex& complex, int d) {
  try {
    return is_connected(build_dual(complex, d));
  } catch (const EmptyDual&) {
    return false;
  }
}

bool is_induced_path(const DualGraph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) return false;
  if (n == 1) return true;
  if (g.edge_count() != n - 1 || !is_connected(g)) return false;
  std::size_t endpoints = 0;
  for (DualGraph::Node i = 0; i < n; ++i) {
    const auto deg = g.degree(i);
    if (deg == 1) {
      ++endpoints;
    } else if (deg != 2) {
      return false;
    }
  }
  return endpoints == 2;
}

namespace {

// Unit-capacity flow network for vertex-disjoint paths: node u splits into
// in(u) = 2u and out(u) = 2u + 1 joined by a capacity-1 arc.
class SplitFlowNetwork {
 public:
  SplitFlowNetwork(const DualGraph& g, DualGraph::Node s, DualGraph::Node t)
      : head_(2 * g.node_count(), -1) {
    constexpr int kUnbounded = std::numeric_limits<int>::max() / 2;
    for (DualGraph::Node u = 0; u < g.node_count(); ++u) {
      add_arc(2 * u, 2 * u + 1, (u == s || u == t) ? kUnbounded : 1);
      for (auto w : g.neighbors(u)) add_arc(2 * u + 1, 2 * w, 1);
    }
    source_ = 2 * s + 1;
    sink_ = 2 * t;
  }

  int max_flow(int limit) {
    int flow = 0;
    std::vector<int> via(head_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> queue{source_};
      via[source_] = -2;
      while (!queue.empty() && via[sink_] == -1) {
        int u = queue.front();
        queue.pop_front();
        for (int a = head_[u]; a >= 0; a = next_[a]) {
          if (cap_[a] > 0 && via[to_[a]] == -1) {
            via[to_[a]] = a;
            queue.push_back(to_[a]);
          }
        }
      }
      if (via[sink_] == -1) break;
      for (int v = sink_; v != source_;) {
        int a = via[v];
        --cap_[a];
        ++cap_[a ^ 1];
        v = to_[a ^ 1];
      }
      ++flow;
    }
    return flow;
  }

 private:
  void add_arc(int from, int to, int cap) {
    for (auto [x, y, c] : {std::tuple{from, to, cap}, std::tuple{to, from, 0}}) {
      to_.push_back(y);
      cap_.push_back(c);
      next_.push_back(head_[x]);
      head_[x] = static_cast<int>(to_.size()) - 1;
    }
  }

  std::vector<int> head_, to_, cap_, next_;
  int source_ = 0, sink_ = 0;
};

}  // namespace

int local_vertex_connectivity(const DualGraph& g, DualGraph::Node s, DualGraph::Node t, int limit) {
  if (s == t || g.adjacent(s, t)) {
    throw InvalidParams("local connectivity needs distinct non-adjacent nodes");
  }
  return SplitFlowNetwork(g, s, t).max_flow(limit);
}

int vertex_connectivity(const DualGraph& g) {
  const std::size_t n = g.node_count();
  if (n <= 1 || !is_connected(g)) return 0;
  if (g.edge_count() == n * (n - 1) / 2) return static_cast<int>(n - 1);

  // Esfahanian-Hakimi: with v of minimum degree, some minimum separator either
  // avoids v (so it separates v from a non-neighbour) or contains v, in which
  // case it separates two non-adjacent neighbours of v.
  DualGraph::Node v = 0;
  for (DualGraph::Node i = 1; i < n; ++i) {
    if (g.degree(i) < g.degree(v)) v = i;
  }
  int best = static_cast<int>(g.degree(v));
  for (DualGraph::Node w = 0; w < n && best > 0; ++w) {
    if (w == v || g.adjacent(v, w)) continue;
    best = std::min(best, local_vertex_connectivity(g, v, w, best));
  }
  auto nb = g.neighbors(v);
  for (std::size_t a = 0; a < nb.size(); ++a) {
    for (std::size_t b = a + 1; b < nb.size(); ++b) {
      if (g.adjacent(nb[a], nb[b])) continue;
      best = std::min(best, local_vertex_connectivity(g, nb[a], nb[b], best));
    }
  }
  return best;
}

std::int64_t caccetta_smyth_bound(std::int64_t num_nodes, std::int64_t K) {
  if (K < 1 || num_nodes < 2) {
    throw InvalidParams("caccetta_smyth_bound needs K >= 1 and at least 2 nodes");
  }
  return (num_nodes - 2) / K + 1;
}

DualGraph johnson_graph(Vertex n, int k) {
  if (k < 1 || static_cast<Vertex>(k) > n) throw InvalidParams("johnson_graph needs 1 <= k <= n");
  if (static_cast<std::size_t>(k) > Face::kMaxVertices) throw InvalidParams("k exceeds face capacity");
  std::vector<Face> nodes;
  std::vector<Vertex> buf(k);
  for (int i = 0; i < k; ++i) buf[i] = i + 1;
  while (true) {
    nodes.push_back(Face::from_sorted(buf));
    int i = k - 1;
    while (i >= 0 && buf[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++buf[i];
    for (int j = i + 1; j < k; ++j) buf[j] = buf[j - 1] + 1;
  }
  std::vector<std::pair<DualGraph::Node, DualGraph::Node>> edges;
  for (DualGraph::Node a = 0; a < nodes.size(); ++a) {
    for (DualGraph::Node b = a + 1; b < nodes.size(); ++b) {
      std::size_t common = 0;
      for (Vertex x : nodes[a]) common += nodes[b].contains(x) ? 1 : 0;
      if (common + 1 == static_cast<std::size_t>(k)) edges.emplace_back(a, b);
    }
  }
  return DualGraph(std::move(nodes), edges);
}

namespace {

struct InducedPathSearch {
  std::vector<std::uint64_t> closed_nbhd;  // N[u] as a bitmask
  std::vector<std::uint64_t> open_nbhd;
  int best = 0;

  // `blocked` = union of closed neighbourhoods of every path node except the
  // current end; extensions must avoid it so the path stays induced.
  void extend(std::uint64_t end, std::uint64_t blocked, int length) {
    best = std::max(best, length);
    const auto e = static_cast<std::size_t>(std::countr_zero(end));
    std::uint64_t options = open_nbhd[e] & ~blocked;
    const std::uint64_t next_blocked = blocked | closed_nbhd[e];
    while (options) {
      const std::uint64_t bit = options & (~options + 1);
      options ^= bit;
      extend(bit, next_blocked, length + 1);
    }
  }
};

}  // namespace

int longest_induced_path_bruteforce(const DualGraph& g, std::size_t node_limit) {
  const std::size_t n = g.node_count();
  if (node_limit > 64) node_limit = 64;
  if (n > node_limit) {
    throw RefusedSize("graph has " + std::to_string(n) + " nodes; brute force limited to " +
                      std::to_string(node_limit));
  }
  if (n == 0) return 0;
  InducedPathSearch search;
  search.open_nbhd.assign(n, 0);
  search.closed_nbhd.assign(n, 0);
  for (DualGraph::Node u = 0; u < n; ++u) {
    for (auto w : g.neighbors(u)) search.open_nbhd[u] |= std::uint64_t{1} << w;
    search.closed_nbhd[u] = search.open_nbhd[u] | (std::uint64_t{1} << u);
  }
  for (DualGraph::Node s = 0; s < n; ++s) {
    search.extend(std::uint64_t{1} << s, std::uint64_t{1} << s, 0);
  }
  return search.best;
}

}  // namespace cforge
