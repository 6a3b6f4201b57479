#include <set>

#include "cforge/binomial.hpp"
#include "cforge/complex.hpp"
#include "cforge/dual_graph.hpp"
#include "cforge/errors.hpp"
#include "cforge/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cforge;

namespace {

oracle::Adjacency to_adjacency(const DualGraph& g) {
  oracle::Adjacency adj(g.node_count(), std::vector<bool>(g.node_count(), false));
  for (DualGraph::Node u = 0; u < g.node_count(); ++u) {
    for (auto v : g.neighbors(u)) adj[u][v] = true;
  }
  return adj;
}

DualGraph path_graph(std::uint32_t n) {
  std::vector<Face> nodes;
  std::vector<std::pair<DualGraph::Node, DualGraph::Node>> edges;
  for (std::uint32_t i = 0; i < n; ++i) {
    nodes.push_back(Face::make({i + 1}));
    if (i > 0) edges.emplace_back(i - 1, i);
  }
  return DualGraph(nodes, edges);
}

DualGraph cycle_graph(std::uint32_t n) {
  std::vector<Face> nodes;
  std::vector<std::pair<DualGraph::Node, DualGraph::Node>> edges;
  for (std::uint32_t i = 0; i < n; ++i) {
    nodes.push_back(Face::make({i + 1}));
    edges.emplace_back(i, (i + 1) % n);
  }
  return DualGraph(nodes, edges);
}

DualGraph random_graph(std::uint32_t n, double density, Rng& rng) {
  std::vector<Face> nodes;
  std::vector<std::pair<DualGraph::Node, DualGraph::Node>> edges;
  for (std::uint32_t i = 0; i < n; ++i) nodes.push_back(Face::make({i + 1}));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (rng.uniform_unit() < density) edges.emplace_back(i, j);
    }
  }
  return DualGraph(nodes, edges);
}

}  // namespace

TEST_CASE("graph construction") {
  const auto g = path_graph(3);
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_THROWS_AS(DualGraph({Face::make({1})}, {{0, 0}}), InvalidParams);
  CHECK_THROWS_AS(DualGraph({Face::make({1})}, {{0, 1}}), InvalidParams);
}

TEST_CASE("dual graph examples") {
  const auto corridor = build_dual(straight_corridor(2, 5), 2);
  CHECK(corridor.node_count() == 3);
  CHECK(corridor.edge_count() == 2);
  CHECK(corridor.adjacent(0, 1));
  CHECK(corridor.adjacent(1, 2));
  CHECK(is_induced_path(corridor));
  CHECK(diameter(corridor) == 2);

  const auto sphere = build_dual(boundary_corridor(2, 6), 2);
  CHECK(sphere.node_count() == 8);
  for (DualGraph::Node i = 0; i < 8; ++i) CHECK(sphere.degree(i) == 3);
  CHECK(diameter(sphere) == 3);
  CHECK(vertex_connectivity(sphere) == 3);

  const auto single = build_dual(SimplicialComplex(3, {Face::make({1, 2, 3})}), 2);
  CHECK(single.node_count() == 1);
  CHECK(single.edge_count() == 0);
  CHECK(diameter(single) == 0);

  CHECK_THROWS_AS(build_dual(straight_corridor(1, 4), 2), EmptyDual);
}

TEST_CASE("dual graph matches pairwise intersection oracle") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + static_cast<int>(rng.uniform_below(3));
    const Vertex n = static_cast<Vertex>(d + 2 + rng.uniform_below(5));
    std::vector<Face> faces;
    const auto all = k_faces(complete_complex(n, d), d);
    for (const Face& f : all) {
      if (rng.uniform_unit() < 0.4) faces.push_back(f);
    }
    if (faces.empty()) continue;
    const auto g = build_dual(SimplicialComplex(n, faces), d);
    std::vector<oracle::Subset> masks;
    for (const Face& f : g.nodes()) {
      oracle::Subset s = 0;
      for (Vertex v : f) s |= oracle::Subset{1} << (v - 1);
      masks.push_back(s);
    }
    CHECK(to_adjacency(g) == oracle::dual_adjacency(masks, d));
    const int want = oracle::diameter(to_adjacency(g));
    if (want < 0) {
      CHECK_THROWS_AS(diameter(g), NotStronglyConnected);
      CHECK_FALSE(is_strongly_connected(SimplicialComplex(n, faces), d));
    } else {
      CHECK(diameter(g) == want);
      CHECK(is_strongly_connected(SimplicialComplex(n, faces), d));
    }
  }
}

TEST_CASE("corridor duals are paths") {
  for (int d = 1; d <= 4; ++d) {
    for (Vertex N = d + 1; N <= 12; ++N) {
      const auto g = build_dual(straight_corridor(d, N), d);
      CHECK(g.node_count() == N - d);
      CHECK(is_induced_path(g));
      CHECK(diameter(g) == static_cast<int>(N) - d - 1);
    }
  }
}

TEST_CASE("strong connectivity") {
  CHECK(is_strongly_connected(straight_corridor(2, 5), 2));
  CHECK_FALSE(is_strongly_connected(SimplicialComplex(6, {Face::make({1, 2, 3}), Face::make({4, 5, 6})}), 2));
  CHECK(is_strongly_connected(boundary_corridor(2, 6), 2));
  CHECK_FALSE(is_strongly_connected(straight_corridor(1, 3), 2));
}

TEST_CASE("induced path recognition") {
  CHECK(is_induced_path(path_graph(1)));
  CHECK(is_induced_path(path_graph(5)));
  CHECK_FALSE(is_induced_path(cycle_graph(4)));
  // Two disjoint edges: right degrees overall, but not connected.
  CHECK_FALSE(is_induced_path(DualGraph({Face::make({1}), Face::make({2}), Face::make({3}), Face::make({4})},
                                        {{0, 1}, {2, 3}})));
}

TEST_CASE("vertex connectivity") {
  CHECK(vertex_connectivity(path_graph(3)) == 1);
  CHECK(vertex_connectivity(build_dual(boundary_complex_of_simplex(Face::make({1, 2, 3, 4})), 2)) == 3);
  CHECK(vertex_connectivity(cycle_graph(6)) == 2);
  CHECK(vertex_connectivity(DualGraph({Face::make({1}), Face::make({2})}, {})) == 0);

  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::uint32_t>(2 + rng.uniform_below(9));
    const auto g = random_graph(n, 0.2 + 0.7 * rng.uniform_unit(), rng);
    CHECK_MESSAGE(vertex_connectivity(g) == oracle::vertex_connectivity(to_adjacency(g)), "trial " << trial);
  }
}

TEST_CASE("boundary corridors are (d+1)-connected and within the diameter sandwich") {
  for (int d = 1; d <= 3; ++d) {
    for (Vertex N = d + 2; N <= 12; ++N) {
      const auto g = build_dual(boundary_corridor(d, N), d);
      const int kappa = vertex_connectivity(g);
      CHECK(kappa == d + 1);
      const int diam = diameter(g);
      CHECK(diam <= caccetta_smyth_bound(static_cast<std::int64_t>(g.node_count()), kappa));
      CHECK(static_cast<double>(diam) >= static_cast<double>(d) / (d + 1) * N - d - 1);
    }
  }
}

TEST_CASE("boundary corridor diameters on larger N") {
  CHECK(diameter(build_dual(boundary_corridor(2, 8), 2)) == 4);
  const auto g = build_dual(boundary_corridor(2, 30), 2);
  CHECK(g.node_count() == 56);
  CHECK(diameter(g) == 19);
  CHECK(diameter(g) >= 17);
  CHECK(vertex_connectivity(g) == 3);
}

TEST_CASE("Caccetta-Smyth bound") {
  CHECK(caccetta_smyth_bound(8, 3) == 3);
  CHECK(caccetta_smyth_bound(2, 1) == 1);
  CHECK(caccetta_smyth_bound(10, 3) == 3);
  CHECK_THROWS_AS(caccetta_smyth_bound(8, 0), InvalidParams);
}

TEST_CASE("Johnson graphs") {
  const auto k4 = johnson_graph(4, 3);
  CHECK(k4.node_count() == 4);
  CHECK(k4.edge_count() == 6);
  const auto j53 = johnson_graph(5, 3);
  CHECK(j53.node_count() == 10);
  for (DualGraph::Node i = 0; i < 10; ++i) CHECK(j53.degree(i) == 6);
  const auto kn = johnson_graph(6, 1);
  CHECK(kn.edge_count() == 15);

  for (Vertex n = 3; n <= 8; ++n) {
    for (int d = 1; d + 1 <= static_cast<int>(n); ++d) {
      const auto j = johnson_graph(n, d + 1);
      CHECK(j.node_count() == binomial(n, d + 1));
      CHECK(j.nodes() == build_dual(complete_complex(n, d), d).nodes());
      CHECK(to_adjacency(j) == to_adjacency(build_dual(complete_complex(n, d), d)));
      for (DualGraph::Node i = 0; i < j.node_count(); ++i) {
        CHECK(j.degree(i) == static_cast<std::size_t>((d + 1) * (static_cast<int>(n) - d - 1)));
      }
    }
  }
}

TEST_CASE("longest induced path by exhaustive search") {
  CHECK(longest_induced_path_bruteforce(johnson_graph(4, 3)) == 1);
  CHECK(longest_induced_path_bruteforce(path_graph(5)) == 4);
  CHECK(longest_induced_path_bruteforce(cycle_graph(6)) == 4);
  // Frozen from an independent subset-enumeration run over J(5,3).
  CHECK(longest_induced_path_bruteforce(johnson_graph(5, 3)) == 3);
  CHECK(oracle::longest_induced_path(to_adjacency(johnson_graph(5, 3))) == 3);
  CHECK_THROWS_AS(longest_induced_path_bruteforce(johnson_graph(7, 3)), RefusedSize);

  Rng rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const auto n = static_cast<std::uint32_t>(1 + rng.uniform_below(10));
    const auto g = random_graph(n, rng.uniform_unit(), rng);
    CHECK(longest_induced_path_bruteforce(g) == oracle::longest_induced_path(to_adjacency(g)));
  }
}
