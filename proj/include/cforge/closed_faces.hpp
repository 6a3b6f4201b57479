#pragma once

#include <cstdint>
#include <vector>

#include "cforge/face.hpp"

namespace cforge {

/// Set of k-vertex faces of [n] backed by a dense bit per possible face,
/// addressed by colexicographic rank. Membership and insertion are O(k).
class ClosedFaceSet {
 public:
  ClosedFaceSet() = default;
  /// Throws InvalidParams when C(n, k) exceeds the addressable limit.
  ClosedFaceSet(Vertex n, int face_size);

  static constexpr std::uint64_t kMaxFaces = std::uint64_t{1} << 30;

  Vertex n() const { return n_; }
  int face_size() const { return face_size_; }
  std::uint64_t capacity() const { return capacity_; }

  /// Colex rank of a k-subset of [n], in [0, C(n, k)).
  std::uint64_t rank(const Face& f) const;
  bool contains(const Face& f) const;
  /// Returns false (and changes nothing) when f is already present.
  bool insert(const Face& f);

  std::size_t size() const { return order_.size(); }
  /// Faces in insertion order.
  const std::vector<Face>& insertion_order() const { return order_; }

  friend bool operator==(const ClosedFaceSet& a, const ClosedFaceSet& b) {
    return a.n_ == b.n_ && a.face_size_ == b.face_size_ && a.order_ == b.order_;
  }

 private:
  Vertex n_ = 0;
  int face_size_ = 0;
  std::uint64_t capacity_ = 0;
  // choose_[i][j] = C(i, j) for i < n, j <= face_size.
  std::vector<std::uint64_t> choose_;
  std::vector<std::uint64_t> bits_;
  std::vector<Face> order_;
};

}  // namespace cforge
