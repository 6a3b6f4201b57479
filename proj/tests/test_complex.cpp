#include <map>

#include "cforge/binomial.hpp"
#include "cforge/complex.hpp"
#include "cforge/errors.hpp"
#include "cforge/face.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cforge;

namespace {

oracle::Subset mask(const Face& f) {
  oracle::Subset s = 0;
  for (Vertex v : f) s |= oracle::Subset{1} << (v - 1);
  return s;
}

}  // namespace

TEST_CASE("faces canonicalize and reject degenerate input") {
  CHECK(Face::make({3, 1, 2}) == Face::make({1, 2, 3}));
  CHECK(Face::make({3, 1, 2}).to_string() == "{1,2,3}");
  CHECK(Face::make(Face::make({9, 4}).vertices()) == Face::make({4, 9}));
  CHECK(Face::make({5}).dim() == 0);
  CHECK_THROWS_AS(Face::make({1, 1, 2}), DegenerateFace);
  CHECK_THROWS_AS(Face::make({0, 1}), InvalidParams);
  CHECK_THROWS_AS(Face::make(std::span<const Vertex>{}), InvalidParams);
  const Face f = Face::make({2, 5, 7});
  CHECK(f.dim() == 2);
  CHECK(f.contains(Vertex{5}));
  CHECK_FALSE(f.contains(Vertex{4}));
  CHECK(f.contains(Face::make({2, 7})));
  CHECK(f.without_index(1) == Face::make({2, 7}));
  CHECK(Face::make({2, 7}).with(5) == f);
  CHECK(subfaces(f, 2).size() == 3);
  CHECK(subfaces(f, 2).front() == Face::make({2, 5}));
}

TEST_CASE("binomials") {
  CHECK(binomial(10, 2) == 45);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(62, 31) == 465428353255261088ULL);
  CHECK_THROWS_AS(binomial(200, 100), InvalidParams);
  CHECK(binomial_real(10, 2) == doctest::Approx(45));
  CHECK(factorial(5) == 120);
}

TEST_CASE("complex construction keeps only maximal faces") {
  SimplicialComplex x(5, {Face::make({1, 2, 3}), Face::make({1, 2}), Face::make({4, 5}), Face::make({1, 2, 3})});
  CHECK(x.facet_count() == 2);
  CHECK(x.dimension() == 2);
  CHECK_FALSE(x.is_pure(2));
  CHECK_THROWS_AS(SimplicialComplex(3, {Face::make({1, 4})}), InvalidParams);
  CHECK(SimplicialComplex(3, {}).dimension() == -1);
}

TEST_CASE("straight corridor examples") {
  const auto sc = straight_corridor(2, 5);
  CHECK(sc.facets() == std::vector<Face>{Face::make({1, 2, 3}), Face::make({2, 3, 4}), Face::make({3, 4, 5})});
  const auto fv = f_vector(sc);
  CHECK(fv.counts == std::vector<std::uint64_t>{5, 7, 3});
  CHECK(straight_corridor(3, 4).facet_count() == 1);
  CHECK(straight_corridor(1, 3).facets() == std::vector<Face>{Face::make({1, 2}), Face::make({2, 3})});
  CHECK_THROWS_AS(straight_corridor(3, 3), InvalidParams);
}

TEST_CASE("boundary corridor on 6 vertices") {
  const auto b = boundary_corridor(2, 6);
  CHECK(b.facets() == std::vector<Face>{Face::make({1, 2, 3}), Face::make({1, 2, 4}), Face::make({1, 3, 4}),
                                        Face::make({2, 3, 5}), Face::make({2, 4, 5}), Face::make({3, 4, 6}),
                                        Face::make({3, 5, 6}), Face::make({4, 5, 6})});
  CHECK(f_vector(b).counts == std::vector<std::uint64_t>{6, 12, 8});
  CHECK(is_pseudomanifold(b, 2));
  // dSC_{d+1}(d+2) is the boundary of a single (d+1)-simplex.
  CHECK(boundary_corridor(2, 4) == boundary_complex_of_simplex(Face::make({1, 2, 3, 4})));
}

TEST_CASE("boundary corridor matches brute-force multiplicity count") {
  for (int d = 1; d <= 3; ++d) {
    for (int N = d + 2; N <= 11; ++N) {
      const auto complex = boundary_corridor(d, N);
      std::vector<oracle::Subset> got;
      for (const Face& f : complex.facets()) got.push_back(mask(f));
      auto want = oracle::boundary_corridor_facets(d, N);
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      CHECK_MESSAGE(got == want, "d=" << d << " N=" << N);
      CHECK(is_pseudomanifold(boundary_corridor(d, N), d));
    }
  }
}

TEST_CASE("k_faces agree with subset enumeration") {
  const auto x = SimplicialComplex(7, {Face::make({1, 2, 3, 4}), Face::make({3, 5}), Face::make({5, 6, 7})});
  const auto faces = oracle::all_faces(7, {mask(Face::make({1, 2, 3, 4})), mask(Face::make({3, 5})),
                                           mask(Face::make({5, 6, 7}))});
  std::map<int, std::size_t> by_dim;
  for (auto s : faces) ++by_dim[std::popcount(s) - 1];
  for (int k = 0; k <= 3; ++k) CHECK(k_faces(x, k).size() == by_dim[k]);
  CHECK(k_faces(x, -1) == std::vector<Face>{Face{}});
  CHECK(k_faces(x, 4).empty());
  CHECK_THROWS_AS(k_faces(x, -2), InvalidParams);
}

TEST_CASE("codimension face counts of the straight corridor") {
  CHECK(corridor_face_count(2, 5, 1) == 7);  // edges
  CHECK(corridor_face_count(2, 5, 2) == 5);  // vertices
  CHECK(corridor_face_count(2, 5, 3) == 1);  // the empty face
  CHECK(corridor_face_count(3, 10, 2) == 24);
  for (int k = 1; k <= 4; ++k) CHECK(corridor_face_count(3, 4, k) == binomial(4, k));
  CHECK_THROWS_AS(corridor_face_count(2, 5, 4), InvalidParams);
  CHECK_THROWS_AS(corridor_face_count(2, 5, 0), InvalidParams);

  for (int D = 1; D <= 4; ++D) {
    for (int N = D + 1; N <= 12; ++N) {
      const auto faces = oracle::all_faces(N, oracle::corridor_facets(D, N));
      std::map<int, std::uint64_t> by_size;
      for (auto s : faces) ++by_size[std::popcount(s)];
      by_size[0] = 1;
      const auto x = straight_corridor(D, N);
      for (int k = 1; k <= D + 1; ++k) {
        const int size = D - k + 1;
        CHECK_MESSAGE(corridor_face_count(D, N, k) == by_size[size], "D=" << D << " N=" << N << " k=" << k);
        CHECK(k_faces(x, D - k).size() == by_size[size]);
      }
    }
  }
}

TEST_CASE("pseudomanifold recognition") {
  CHECK(is_pseudomanifold(boundary_complex_of_simplex(Face::make({1, 2, 3, 4})), 2));
  CHECK_FALSE(is_pseudomanifold(straight_corridor(2, 5), 2));
  CHECK_FALSE(is_pseudomanifold(SimplicialComplex(5, {Face::make({1, 2, 3}), Face::make({3, 4})}), 2));
}

TEST_CASE("codimension-2 skeleton and complete complex") {
  const auto skel = codim2_skeleton(Face::make({2, 4, 6}));
  CHECK(skel.facets() == std::vector<Face>{Face::make({2}), Face::make({4}), Face::make({6})});
  CHECK(complete_complex(5, 2).facet_count() == 10);
}

TEST_CASE("reduced Euler characteristic") {
  CHECK(f_vector(boundary_corridor(2, 6)).reduced_euler_characteristic() == 1);   // 2-sphere
  CHECK(f_vector(straight_corridor(2, 7)).reduced_euler_characteristic() == 0);   // contractible
}
