#pragma once

// Brute-force reference implementations used to cross-check the library.
// They share no code with it beyond plain containers.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <set>
#include <vector>

namespace oracle {

using Subset = std::uint32_t;  // bitmask over vertices 1..32 (bit v-1)
using Adjacency = std::vector<std::vector<bool>>;

inline std::vector<int> members(Subset s) {
  std::vector<int> out;
  for (int v = 1; s != 0; ++v, s >>= 1) {
    if (s & 1U) out.push_back(v);
  }
  return out;
}

inline Subset mask_of(const std::vector<int>& vertices) {
  Subset s = 0;
  for (int v : vertices) s |= Subset{1} << (v - 1);
  return s;
}

/// All nonempty subsets (as masks) of the given facets, by enumerating every
/// subset of [N] and testing containment.
inline std::set<Subset> all_faces(int N, const std::vector<Subset>& facets) {
  std::set<Subset> faces;
  for (Subset s = 1; s < (Subset{1} << N); ++s) {
    for (Subset f : facets) {
      if ((s & ~f) == 0) {
        faces.insert(s);
        break;
      }
    }
  }
  return faces;
}

/// Facets [k, k+D] of the straight corridor as masks.
inline std::vector<Subset> corridor_facets(int D, int N) {
  std::vector<Subset> facets;
  for (int k = 1; k + D <= N; ++k) {
    Subset f = 0;
    for (int v = k; v <= k + D; ++v) f |= Subset{1} << (v - 1);
    facets.push_back(f);
  }
  return facets;
}

/// d-faces of the straight (d+1)-corridor lying in exactly one facet.
inline std::vector<Subset> boundary_corridor_facets(int d, int N) {
  std::vector<Subset> big = corridor_facets(d + 1, N);
  std::vector<Subset> out;
  for (Subset s = 1; s < (Subset{1} << N); ++s) {
    if (std::popcount(s) != d + 1) continue;
    int containing = 0;
    for (Subset f : big) containing += (s & ~f) == 0 ? 1 : 0;
    if (containing == 1) out.push_back(s);
  }
  return out;
}

/// Adjacency of the dual graph on the given d-faces (masks of size d+1).
inline Adjacency dual_adjacency(const std::vector<Subset>& faces, int d) {
  const std::size_t n = faces.size();
  Adjacency adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      adj[i][j] = i != j && std::popcount(faces[i] & faces[j]) == d;
    }
  }
  return adj;
}

inline std::vector<int> bfs(const Adjacency& adj, int source, const std::vector<bool>& removed) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (adj[u][v] && !removed[v] && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(static_cast<int>(v));
      }
    }
  }
  return dist;
}

/// Diameter by BFS from every node; -1 when disconnected.
inline int diameter(const Adjacency& adj) {
  int best = 0;
  const std::vector<bool> none(adj.size(), false);
  for (std::size_t s = 0; s < adj.size(); ++s) {
    for (int d : bfs(adj, static_cast<int>(s), none)) {
      if (d < 0) return -1;
      best = std::max(best, d);
    }
  }
  return best;
}

inline bool connected_without(const Adjacency& adj, const std::vector<bool>& removed) {
  int start = -1;
  std::size_t alive = 0;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = static_cast<int>(v);
    }
  }
  if (alive <= 1) return true;
  const auto dist = bfs(adj, start, removed);
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (!removed[v] && dist[v] < 0) return false;
  }
  return true;
}

/// Smallest number of nodes whose removal disconnects the graph (n-1 for a
/// complete graph), by trying every subset in order of size. Only for tiny
/// graphs.
inline int vertex_connectivity(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  bool complete = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) complete = complete && (i == j || adj[i][j]);
  }
  if (complete) return n - 1;
  for (int k = 0; k < n - 1; ++k) {
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
      if (std::popcount(s) != k) continue;
      std::vector<bool> removed(n);
      for (int v = 0; v < n; ++v) removed[v] = (s >> v) & 1U;
      if (!connected_without(adj, removed)) return k;
    }
  }
  return n - 1;
}

/// True iff the subgraph induced on `nodes` (bitmask over graph nodes) is a
/// path with at least one node.
inline bool induces_path(const Adjacency& adj, std::uint32_t nodes) {
  const auto list = members(nodes);
  if (list.empty()) return false;
  int ends = 0;
  std::size_t edges = 0;
  for (int a : list) {
    int deg = 0;
    for (int b : list) deg += adj[a - 1][b - 1] ? 1 : 0;
    if (deg > 2) return false;
    if (deg <= 1) ++ends;
    edges += static_cast<std::size_t>(deg);
  }
  edges /= 2;
  if (edges + 1 != list.size()) return false;  // a connected acyclic graph
  std::vector<bool> removed(adj.size(), true);
  for (int a : list) removed[a - 1] = false;
  return connected_without(adj, removed) && (list.size() == 1 || ends == 2);
}

/// Longest induced path (in edges) by trying every node subset.
inline int longest_induced_path(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  int best = 0;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    if (induces_path(adj, s)) best = std::max(best, std::popcount(s) - 1);
  }
  return best;
}

/// Rank over GF(2) of a dense 0/1 matrix, by plain row reduction on bools.
inline std::size_t gf2_rank(std::vector<std::vector<bool>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = rank;
    while (p < m.size() && !m[p][c]) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != rank && m[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] != m[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
