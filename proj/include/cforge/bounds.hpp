#pragma once

#include <cstdint>
#include <vector>

namespace cforge {

/// Volume bound on the length of an induced dual path in a d-complex on n
/// vertices: (C(n, d) - (d+1)) / d.
double hs_upper(double n, int d);
/// n^d / (d * d!)
double hs_first_order(double n, int d);
/// Finite-n pseudomanifold diameter bound 2 C(n, d) / (d+1)^2 + 1.
double hpm_upper(double n, int d);
/// 2 n^d / ((d+1) (d+1)!)
double hpm_first_order(double n, int d);
/// Diameter bound for a pseudomanifold with f_{d-1} ridges:
/// 2 f_{d-1} / (d+1)^2 + 1.
double pm_ridge_diameter_bound(std::uint64_t ridges, int d);
/// Lower bound (d/(d+1)) N - d - 1 on the diameter of dSC_{d+1}(N).
double pm_diameter_lower(double N, int d);

struct BoundsRow {
  double n = 0;
  int d = 0;
  double hs_exact = 0;
  double hs_first_order = 0;
  double hpm_exact = 0;
  double hpm_first_order = 0;

  friend bool operator==(const BoundsRow&, const BoundsRow&) = default;
};

/// One row per (n, d) pair, n-major. Throws InvalidParams unless n > d >= 1
/// for every pair.
std::vector<BoundsRow> bounds_table(const std::vector<double>& n_list, const std::vector<int>& d_list);

}  // namespace cforge
