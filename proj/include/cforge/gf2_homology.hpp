#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cforge/complex.hpp"

namespace cforge {

/// Dense matrix over the two-element field with bit-packed rows.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);
  void flip(std::size_t r, std::size_t c);

  bool is_zero() const;
  std::size_t popcount_column(std::size_t c) const;

  /// Matrix product over GF(2). Throws InvalidParams on shape mismatch.
  Gf2Matrix multiply(const Gf2Matrix& rhs) const;
  /// this * x for a column vector x of length cols().
  std::vector<bool> apply(const std::vector<bool>& x) const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  friend std::size_t rank_gf2(Gf2Matrix m);
  std::size_t words_per_row() const { return (cols_ + 63) / 64; }
  std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_per_row(); }
  const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_per_row(); }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Rank over GF(2) by Gaussian elimination with word-level XOR.
std::size_t rank_gf2(Gf2Matrix m);

/// Ordered faces per dimension together with the boundary maps between them.
struct ChainComplexRep {
  /// faces[k] = sorted k-faces, k = 0..dim.
  std::vector<std::vector<Face>> faces;
  /// boundary[k] maps k-chains to (k-1)-chains, k = 1..dim; boundary[0] is
  /// the augmentation (a single all-ones row) when the complex is nonempty.
  std::vector<Gf2Matrix> boundary;
};

ChainComplexRep chain_complex(const SimplicialComplex& complex);

/// The k-th boundary matrix: one column per k-face, one row per (k-1)-face.
/// k = 0 gives the augmentation map onto the empty face (1 x f_0 of ones).
Gf2Matrix boundary_matrix(const SimplicialComplex& complex, int k);

/// Reduced Betti number over GF(2): dim ker d_k - rank d_{k+1}, with d_0 the
/// augmentation. Zero for k above the dimension.
int reduced_betti(const SimplicialComplex& complex, int k);

/// Reduced Betti numbers for k = 0..dimension.
std::vector<int> reduced_betti_numbers(const SimplicialComplex& complex);

struct LemmaCheck {
  bool holds = true;
  /// False when the complex has dimension > d or more than d facets, in which
  /// case `holds` is vacuously true.
  bool applicable = false;
};

/// A complex of dimension <= d with at most d facets has vanishing reduced
/// homology in degree d-1.
LemmaCheck check_small_facet_lemma(const SimplicialComplex& complex, int d);

/// Boundary of the central d-simplex on 1..d+1, with each of its d+1 facets
/// coned to its own fresh apex d+2, ..., 2d+2. Has d+1 facets and nonzero
/// reduced homology in degree d-1.
SimplicialComplex tightness_example(int d);

/// Support of the GF(2) sum of the boundaries of `selected` d-faces of the
/// complex, as a sorted list of (d-1)-faces. Throws InvalidFace when a
/// selected face is not a d-face of the complex.
std::vector<Face> boundary_of_indicator(const SimplicialComplex& complex, int d,
                                        const std::vector<Face>& selected);

}  // namespace cforge
