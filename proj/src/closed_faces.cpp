#include "cforge/closed_faces.hpp"

#include <string>

#include "cforge/binomial.hpp"
#include "cforge/errors.hpp"

namespace cforge {

ClosedFaceSet::ClosedFaceSet(Vertex n, int face_size) : n_(n), face_size_(face_size) {
  if (face_size < 1 || static_cast<Vertex>(face_size) > n) {
    throw InvalidParams("closed face set needs 1 <= face size <= n");
  }
  capacity_ = binomial(n, face_size);
  if (capacity_ > kMaxFaces) {
    throw InvalidParams("C(" + std::to_string(n) + ", " + std::to_string(face_size) +
                        ") faces exceed the dense index limit");
  }
  const std::size_t stride = face_size + 1;
  choose_.assign(static_cast<std::size_t>(n) * stride, 0);
  for (Vertex i = 0; i < n; ++i) {
    for (int j = 0; j <= face_size; ++j) choose_[i * stride + j] = binomial(i, j);
  }
  bits_.assign((capacity_ + 63) / 64, 0);
}

std::uint64_t ClosedFaceSet::rank(const Face& f) const {
  const std::size_t stride = face_size_ + 1;
  std::uint64_t r = 0;
  for (std::size_t j = 0; j < f.size(); ++j) r += choose_[(f[j] - 1) * stride + (j + 1)];
  return r;
}

bool ClosedFaceSet::contains(const Face& f) const {
  const std::uint64_t r = rank(f);
  return (bits_[r / 64] >> (r % 64)) & 1U;
}

bool ClosedFaceSet::insert(const Face& f) {
  if (f.size() != static_cast<std::size_t>(face_size_) || f.back() > n_) {
    throw InvalidFace(f.to_string() + " is not a " + std::to_string(face_size_) + "-subset of [" +
                      std::to_string(n_) + "]");
  }
  const std::uint64_t r = rank(f);
  std::uint64_t& word = bits_[r / 64];
  const std::uint64_t mask = std::uint64_t{1} << (r % 64);
  if (word & mask) return false;
  word |= mask;
  order_.push_back(f);
  return true;
}

}  // namespace cforge
