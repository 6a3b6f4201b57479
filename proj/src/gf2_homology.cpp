#include "cforge/gf2_homology.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

#include "cforge/errors.hpp"

namespace cforge {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * ((cols + 63) / 64), 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1U; }

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  if (value) {
    row(r)[c / 64] |= mask;
  } else {
    row(r)[c / 64] &= ~mask;
  }
}

void Gf2Matrix::flip(std::size_t r, std::size_t c) { row(r)[c / 64] ^= std::uint64_t{1} << (c % 64); }

bool Gf2Matrix::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Gf2Matrix::popcount_column(std::size_t c) const {
  std::size_t count = 0;
  for (std::size_t r = 0; r < rows_; ++r) count += get(r, c) ? 1 : 0;
  return count;
}

Gf2Matrix Gf2Matrix::multiply(const Gf2Matrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw InvalidParams("shape mismatch: " + std::to_string(rows_) + "x" + std::to_string(cols_) + " * " +
                        std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  }
  Gf2Matrix out(rows_, rhs.cols_);
  const std::size_t words = out.words_per_row();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t* dst = out.row(r);
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(r, k)) continue;
      const std::uint64_t* src = rhs.row(k);
      for (std::size_t w = 0; w < words; ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

std::vector<bool> Gf2Matrix::apply(const std::vector<bool>& x) const {
  if (x.size() != cols_) throw InvalidParams("vector length does not match column count");
  std::vector<bool> y(rows_, false);
  for (std::size_t r = 0; r < rows_; ++r) {
    bool acc = false;
    for (std::size_t c = 0; c < cols_; ++c) acc ^= (x[c] && get(r, c));
    y[r] = acc;
  }
  return y;
}

std::size_t rank_gf2(Gf2Matrix m) {
  const std::size_t words = m.words_per_row();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols_ && rank < m.rows_; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < m.rows_ && !(m.row(pivot)[w] & mask)) ++pivot;
    if (pivot == m.rows_) continue;
    if (pivot != rank) {
      std::swap_ranges(m.row(pivot), m.row(pivot) + words, m.row(rank));
    }
    const std::uint64_t* prow = m.row(rank);
    for (std::size_t r = rank + 1; r < m.rows_; ++r) {
      std::uint64_t* target = m.row(r);
      if (!(target[w] & mask)) continue;
      // Columns left of c are already zero in both rows.
      for (std::size_t k = w; k < words; ++k) target[k] ^= prow[k];
    }
    ++rank;
  }
  return rank;
}

namespace {

Gf2Matrix incidence_matrix(const std::vector<Face>& lower, const std::vector<Face>& upper) {
  std::unordered_map<Face, std::size_t, FaceHash> row_of;
  row_of.reserve(lower.size());
  for (std::size_t i = 0; i < lower.size(); ++i) row_of.emplace(lower[i], i);
  Gf2Matrix m(lower.size(), upper.size());
  for (std::size_t c = 0; c < upper.size(); ++c) {
    for (std::size_t drop = 0; drop < upper[c].size(); ++drop) {
      m.set(row_of.at(upper[c].without_index(drop)), c, true);
    }
  }
  return m;
}

Gf2Matrix augmentation(std::size_t vertex_count) {
  Gf2Matrix m(1, vertex_count);
  for (std::size_t c = 0; c < vertex_count; ++c) m.set(0, c, true);
  return m;
}

}  // namespace

ChainComplexRep chain_complex(const SimplicialComplex& complex) {
  ChainComplexRep rep;
  for (int k = 0; k <= complex.dimension(); ++k) rep.faces.push_back(k_faces(complex, k));
  if (complex.empty()) return rep;
  rep.boundary.push_back(augmentation(rep.faces[0].size()));
  for (int k = 1; k <= complex.dimension(); ++k) {
    rep.boundary.push_back(incidence_matrix(rep.faces[k - 1], rep.faces[k]));
  }
  return rep;
}

Gf2Matrix boundary_matrix(const SimplicialComplex& complex, int k) {
  if (k < 0) throw InvalidParams("boundary_matrix needs k >= 0");
  const auto upper = k_faces(complex, k);
  if (k == 0) return augmentation(upper.size());
  return incidence_matrix(k_faces(complex, k - 1), upper);
}

int reduced_betti(const SimplicialComplex& complex, int k) {
  if (k < 0) throw InvalidParams("reduced_betti needs k >= 0");
  if (k > complex.dimension()) return 0;
  const Gf2Matrix dk = boundary_matrix(complex, k);
  const auto kernel = static_cast<int>(dk.cols() - rank_gf2(dk));
  const auto image = static_cast<int>(rank_gf2(boundary_matrix(complex, k + 1)));
  return kernel - image;
}

std::vector<int> reduced_betti_numbers(const SimplicialComplex& complex) {
  const ChainComplexRep rep = chain_complex(complex);
  const int dim = complex.dimension();
  std::vector<std::size_t> ranks;
  for (const auto& m : rep.boundary) ranks.push_back(rank_gf2(m));
  std::vector<int> betti;
  for (int k = 0; k <= dim; ++k) {
    const std::size_t kernel = rep.faces[k].size() - ranks[k];
    const std::size_t image = k + 1 <= dim ? ranks[k + 1] : 0;
    betti.push_back(static_cast<int>(kernel - image));
  }
  return betti;
}

LemmaCheck check_small_facet_lemma(const SimplicialComplex& complex, int d) {
  LemmaCheck result;
  if (d < 1 || complex.empty() || complex.dimension() > d ||
      complex.facet_count() > static_cast<std::size_t>(d)) {
    return result;
  }
  result.applicable = true;
  result.holds = reduced_betti(complex, d - 1) == 0;
  return result;
}

SimplicialComplex tightness_example(int d) {
  if (d < 2) throw InvalidParams("tightness_example needs d >= 2");
  if (static_cast<std::size_t>(d) + 1 > Face::kMaxVertices) throw InvalidParams("d exceeds face capacity");
  std::vector<Vertex> center(d + 1);
  for (int i = 0; i <= d; ++i) center[i] = i + 1;
  const auto base_faces = subfaces(Face::from_sorted(center), d);
  std::vector<Face> cones;
  Vertex apex = d + 2;
  for (const Face& base : base_faces) cones.push_back(base.with(apex++));
  return SimplicialComplex(apex - 1, std::move(cones));
}

std::vector<Face> boundary_of_indicator(const SimplicialComplex& complex, int d,
                                        const std::vector<Face>& selected) {
  const auto d_faces = k_faces(complex, d);
  std::unordered_map<Face, bool, FaceHash> parity;
  for (const Face& f : selected) {
    if (!std::binary_search(d_faces.begin(), d_faces.end(), f)) {
      throw InvalidFace(f.to_string() + " is not a " + std::to_string(d) + "-face of the complex");
    }
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      auto& bit = parity[f.without_index(drop)];
      bit = !bit;
    }
  }
  std::vector<Face> support;
  for (const auto& [face, odd] : parity) {
    if (odd) support.push_back(face);
  }
  std::sort(support.begin(), support.end());
  return support;
}

}  // namespace cforge
