#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cforge {

/// Vertex ids are 1-based, matching the [n] = {1, ..., n} convention used by
/// every serialized format.
using Vertex = std::uint32_t;

/// A simplex stored as its strictly increasing vertex list in a fixed-size
/// inline buffer. Faces never allocate.
class Face {
 public:
  static constexpr std::size_t kMaxVertices = 12;

  Face() = default;

  /// Canonicalizes `vertices` (any order). Throws InvalidParams for an empty
  /// list, a zero id, or more than kMaxVertices ids; DegenerateFace when an id
  /// repeats.
  static Face make(std::span<const Vertex> vertices);
  static Face make(std::initializer_list<Vertex> vertices) {
    return make(std::span<const Vertex>(vertices.begin(), vertices.size()));
  }

  /// Builds from input already known to be strictly increasing. Only checked
  /// in debug builds.
  static Face from_sorted(std::span<const Vertex> sorted);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  int dim() const { return static_cast<int>(size_) - 1; }

  Vertex operator[](std::size_t i) const { return v_[i]; }
  const Vertex* begin() const { return v_.data(); }
  const Vertex* end() const { return v_.data() + size_; }
  Vertex front() const { return v_[0]; }
  Vertex back() const { return v_[size_ - 1]; }
  std::span<const Vertex> vertices() const { return {v_.data(), size_}; }

  bool contains(Vertex v) const;
  bool contains(const Face& other) const;  // other ⊆ this

  /// This face with the vertex at position `index` removed.
  Face without_index(std::size_t index) const;
  /// This face with `v` inserted; `v` must not already be present.
  Face with(Vertex v) const;

  std::string to_string() const;

  friend bool operator==(const Face& a, const Face& b) {
    return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
  }
  friend std::strong_ordering operator<=>(const Face& a, const Face& b) {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  std::array<Vertex, kMaxVertices> v_{};
  std::uint8_t size_ = 0;
};

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ f.size();
    for (Vertex v : f) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Calls fn(subface) for every k-vertex subset of `face`, in lexicographic
/// order. k == 0 or k > |face| yields nothing.
template <typename Fn>
void for_each_subface(const Face& face, std::size_t k, Fn&& fn) {
  const std::size_t m = face.size();
  if (k == 0 || k > m) return;
  std::array<std::size_t, Face::kMaxVertices> idx{};
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::array<Vertex, Face::kMaxVertices> buf{};
  while (true) {
    for (std::size_t i = 0; i < k; ++i) buf[i] = face[idx[i]];
    fn(Face::from_sorted(std::span<const Vertex>(buf.data(), k)));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// All k-vertex subsets of `face`, lexicographically sorted.
std::vector<Face> subfaces(const Face& face, std::size_t k);

}  // namespace cforge

template <>
struct std::hash<cforge::Face> {
  std::size_t operator()(const cforge::Face& f) const noexcept { return cforge::FaceHash{}(f); }
};
