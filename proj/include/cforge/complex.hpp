#pragma once

#include <cstdint>
#include <vector>

#include "cforge/face.hpp"

namespace cforge {

/// A simplicial complex on the vertex set [n], stored by its facets (maximal
/// faces). Lower faces are generated on demand. Immutable after construction.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Accepts any generating set of faces: duplicates and faces contained in
  /// other faces are dropped. Throws InvalidParams if a vertex exceeds n.
  SimplicialComplex(Vertex n, std::vector<Face> faces);

  Vertex n() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }
  bool empty() const { return facets_.empty(); }

  /// Largest facet dimension; -1 for the empty complex.
  int dimension() const { return dimension_; }
  /// Every facet has dimension d.
  bool is_pure(int d) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  Vertex n_ = 0;
  std::vector<Face> facets_;  // sorted, maximal
  int dimension_ = -1;
};

struct FVector {
  /// counts[k] = number of k-dimensional faces, k = 0..dimension.
  std::vector<std::uint64_t> counts;

  std::uint64_t operator[](int k) const {
    return k >= 0 && static_cast<std::size_t>(k) < counts.size() ? counts[k] : 0;
  }
  /// Reduced Euler characteristic: -1 + f_0 - f_1 + f_2 - ...
  std::int64_t reduced_euler_characteristic() const;

  friend bool operator==(const FVector&, const FVector&) = default;
};

/// Sorted, deduplicated k-dimensional faces of `complex`. k = -1 yields the
/// empty face alone (for a nonempty complex), so that codimension counts
/// extend to the augmentation level. Throws InvalidParams for k < -1.
std::vector<Face> k_faces(const SimplicialComplex& complex, int k);

FVector f_vector(const SimplicialComplex& complex);

/// SC_d(N): facets {k, ..., k+d} for k = 1..N-d.
SimplicialComplex straight_corridor(int d, Vertex N);

/// The boundary of SC_{d+1}(N): d-faces of SC_{d+1}(N) lying in exactly one
/// of its (d+1)-facets. Computed by multiplicity counting.
SimplicialComplex boundary_corridor(int d, Vertex N);

/// Closed form for f_{D-k}(SC_D(N)):  C(D, D-k+1) + (N-D) * C(D, k).
std::uint64_t corridor_face_count(int D, Vertex N, int k);

/// Pure d-dimensional and every (d-1)-face lies in exactly two d-faces.
/// Non-pure input yields false.
bool is_pseudomanifold(const SimplicialComplex& complex, int d);

/// For a window of d+1 vertices, the complex generated by all (d-1)-vertex
/// subsets of the window: the codimension-2 skeleton of that d-simplex.
SimplicialComplex codim2_skeleton(const Face& window);

/// All (|f|-1)-vertex subsets of f. Requires |f| >= 2.
SimplicialComplex boundary_complex_of_simplex(const Face& f);

/// The complete d-dimensional complex K_n^d (all (d+1)-subsets of [n]).
SimplicialComplex complete_complex(Vertex n, int d);

}  // namespace cforge
