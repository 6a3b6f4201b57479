#include "cforge/face.hpp"

#include <cassert>

#include "cforge/errors.hpp"

namespace cforge {

Face Face::make(std::span<const Vertex> vertices) {
  if (vertices.empty()) throw InvalidParams("a face needs at least one vertex");
  if (vertices.size() > kMaxVertices) {
    throw InvalidParams("face has " + std::to_string(vertices.size()) + " vertices, limit is " +
                        std::to_string(kMaxVertices));
  }
  Face f;
  std::copy(vertices.begin(), vertices.end(), f.v_.begin());
  f.size_ = static_cast<std::uint8_t>(vertices.size());
  std::sort(f.v_.begin(), f.v_.begin() + f.size_);
  if (f.v_[0] == 0) throw InvalidParams("vertex ids are 1-based; got 0");
  for (std::size_t i = 1; i < f.size_; ++i) {
    if (f.v_[i] == f.v_[i - 1]) {
      throw DegenerateFace("vertex " + std::to_string(f.v_[i]) + " repeated");
    }
  }
  return f;
}

Face Face::from_sorted(std::span<const Vertex> sorted) {
  assert(!sorted.empty() && sorted.size() <= kMaxVertices);
  assert(std::adjacent_find(sorted.begin(), sorted.end(), std::greater_equal<>()) == sorted.end());
  Face f;
  std::copy(sorted.begin(), sorted.end(), f.v_.begin());
  f.size_ = static_cast<std::uint8_t>(sorted.size());
  return f;
}

bool Face::contains(Vertex v) const { return std::binary_search(begin(), end(), v); }

bool Face::contains(const Face& other) const {
  return std::includes(begin(), end(), other.begin(), other.end());
}

Face Face::without_index(std::size_t index) const {
  assert(index < size_);
  Face f;
  std::size_t out = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    if (i != index) f.v_[out++] = v_[i];
  }
  f.size_ = static_cast<std::uint8_t>(out);
  return f;
}

Face Face::with(Vertex v) const {
  assert(size_ < kMaxVertices && !contains(v));
  Face f;
  std::size_t out = 0;
  std::size_t i = 0;
  while (i < size_ && v_[i] < v) f.v_[out++] = v_[i++];
  f.v_[out++] = v;
  while (i < size_) f.v_[out++] = v_[i++];
  f.size_ = static_cast<std::uint8_t>(out);
  return f;
}

std::string Face::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) s += ',';
    s += std::to_string(v_[i]);
  }
  return s + "}";
}

std::vector<Face> subfaces(const Face& face, std::size_t k) {
  std::vector<Face> out;
  for_each_subface(face, k, [&](const Face& f) { out.push_back(f); });
  return out;
}

}  // namespace cforge
