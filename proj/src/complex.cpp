#include "cforge/complex.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "cforge/binomial.hpp"
#include "cforge/errors.hpp"

namespace cforge {

SimplicialComplex::SimplicialComplex(Vertex n, std::vector<Face> faces) : n_(n) {
  for (const Face& f : faces) {
    if (f.empty()) throw InvalidParams("empty face in generating set");
    if (f.back() > n) {
      throw InvalidParams("face " + f.to_string() + " exceeds vertex bound n=" + std::to_string(n));
    }
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  std::size_t max_size = 0;
  for (const Face& f : faces) max_size = std::max(max_size, f.size());

  // A face is dominated iff it is a subface of some strictly larger face.
  std::map<std::size_t, std::vector<const Face*>> by_size;
  for (const Face& f : faces) by_size[f.size()].push_back(&f);
  std::unordered_set<Face, FaceHash> dominated;
  for (const auto& [size, group] : by_size) {
    if (size == max_size) continue;
    std::unordered_set<Face, FaceHash> wanted;
    for (const Face* f : group) wanted.insert(*f);
    for (const Face& big : faces) {
      if (big.size() <= size) continue;
      for_each_subface(big, size, [&](const Face& sub) {
        if (wanted.count(sub)) dominated.insert(sub);
      });
    }
  }
  facets_.reserve(faces.size() - dominated.size());
  for (const Face& f : faces) {
    if (!dominated.count(f)) facets_.push_back(f);
  }
  dimension_ = static_cast<int>(max_size) - 1;
}

bool SimplicialComplex::is_pure(int d) const {
  if (facets_.empty()) return false;
  return std::all_of(facets_.begin(), facets_.end(), [d](const Face& f) { return f.dim() == d; });
}

std::int64_t FVector::reduced_euler_characteristic() const {
  std::int64_t chi = -1;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const auto c = static_cast<std::int64_t>(counts[k]);
    chi += (k % 2 == 0) ? c : -c;
  }
  return chi;
}

std::vector<Face> k_faces(const SimplicialComplex& complex, int k) {
  if (k < -1) throw InvalidParams("k_faces: dimension must be >= -1, got " + std::to_string(k));
  if (k == -1) return complex.empty() ? std::vector<Face>{} : std::vector<Face>{Face{}};
  std::vector<Face> out;
  const auto size = static_cast<std::size_t>(k + 1);
  for (const Face& f : complex.facets()) {
    for_each_subface(f, size, [&](const Face& s) { out.push_back(s); });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FVector f_vector(const SimplicialComplex& complex) {
  FVector fv;
  for (int k = 0; k <= complex.dimension(); ++k) {
    fv.counts.push_back(k_faces(complex, k).size());
  }
  return fv;
}

SimplicialComplex straight_corridor(int d, Vertex N) {
  if (d < 0 || N < static_cast<Vertex>(d) + 1) {
    throw InvalidParams("straight_corridor needs N >= d+1 (d=" + std::to_string(d) +
                        ", N=" + std::to_string(N) + ")");
  }
  std::vector<Face> facets;
  facets.reserve(N - d);
  std::vector<Vertex> buf(d + 1);
  for (Vertex k = 1; k + d <= N; ++k) {
    for (int i = 0; i <= d; ++i) buf[i] = k + i;
    facets.push_back(Face::from_sorted(buf));
  }
  return SimplicialComplex(N, std::move(facets));
}

SimplicialComplex boundary_corridor(int d, Vertex N) {
  if (d < 0 || N < static_cast<Vertex>(d) + 2) {
    throw InvalidParams("boundary_corridor needs N >= d+2 (d=" + std::to_string(d) +
                        ", N=" + std::to_string(N) + ")");
  }
  const SimplicialComplex thick = straight_corridor(d + 1, N);
  std::unordered_map<Face, int, FaceHash> multiplicity;
  for (const Face& facet : thick.facets()) {
    for_each_subface(facet, d + 1, [&](const Face& s) { ++multiplicity[s]; });
  }
  std::vector<Face> boundary;
  for (const auto& [face, m] : multiplicity) {
    if (m == 1) boundary.push_back(face);
  }
  return SimplicialComplex(N, std::move(boundary));
}

std::uint64_t corridor_face_count(int D, Vertex N, int k) {
  if (D < 0 || N < static_cast<Vertex>(D) + 1) {
    throw InvalidParams("corridor_face_count needs N >= D+1");
  }
  if (k < 1 || k > D + 1) {
    throw InvalidParams("codimension k must lie in [1, D+1], got " + std::to_string(k));
  }
  return binomial(D, D - k + 1) + (static_cast<std::uint64_t>(N) - D) * binomial(D, k);
}

bool is_pseudomanifold(const SimplicialComplex& complex, int d) {
  if (d < 1 || !complex.is_pure(d)) return false;
  std::unordered_map<Face, int, FaceHash> incidence;
  for (const Face& facet : complex.facets()) {
    for_each_subface(facet, d, [&](const Face& s) { ++incidence[s]; });
  }
  return std::all_of(incidence.begin(), incidence.end(),
                     [](const auto& kv) { return kv.second == 2; });
}

SimplicialComplex codim2_skeleton(const Face& window) {
  if (window.size() < 3) {
    throw InvalidParams("codim2_skeleton needs a window of at least 3 vertices (d >= 2)");
  }
  return SimplicialComplex(window.back(), subfaces(window, window.size() - 2));
}

SimplicialComplex boundary_complex_of_simplex(const Face& f) {
  if (f.size() < 2) throw InvalidParams("boundary of a simplex needs at least 2 vertices");
  return SimplicialComplex(f.back(), subfaces(f, f.size() - 1));
}

SimplicialComplex complete_complex(Vertex n, int d) {
  if (d < 0 || n < static_cast<Vertex>(d) + 1) throw InvalidParams("complete_complex needs n >= d+1");
  std::vector<Vertex> all(n);
  for (Vertex v = 1; v <= n; ++v) all[v - 1] = v;
  // [n] can exceed Face capacity, so enumerate (d+1)-subsets directly.
  std::vector<Face> facets;
  std::vector<std::size_t> idx(d + 1);
  for (int i = 0; i <= d; ++i) idx[i] = i;
  std::vector<Vertex> buf(d + 1);
  const std::size_t k = d + 1;
  while (true) {
    for (std::size_t i = 0; i < k; ++i) buf[i] = all[idx[i]];
    facets.push_back(Face::from_sorted(buf));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return SimplicialComplex(n, std::move(facets));
}

}  // namespace cforge
