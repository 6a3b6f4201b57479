#include "cforge/bounds.hpp"

#include <cmath>
#include <string>

#include "cforge/binomial.hpp"
#include "cforge/errors.hpp"

namespace cforge {

namespace {

void require_n_above_d(double n, int d) {
  if (d < 1 || !(n > d)) {
    throw InvalidParams("bounds need n > d >= 1 (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
  }
}

}  // namespace

double hs_upper(double n, int d) {
  require_n_above_d(n, d);
  return (binomial_real(n, d) - (d + 1)) / d;
}

double hs_first_order(double n, int d) {
  require_n_above_d(n, d);
  return std::pow(n, d) / (d * static_cast<double>(factorial(d)));
}

double hpm_upper(double n, int d) {
  require_n_above_d(n, d);
  return 2.0 * binomial_real(n, d) / ((d + 1.0) * (d + 1.0)) + 1.0;
}

double hpm_first_order(double n, int d) {
  require_n_above_d(n, d);
  return 2.0 * std::pow(n, d) / ((d + 1.0) * static_cast<double>(factorial(d + 1)));
}

double pm_ridge_diameter_bound(std::uint64_t ridges, int d) {
  return 2.0 * static_cast<double>(ridges) / ((d + 1.0) * (d + 1.0)) + 1.0;
}

double pm_diameter_lower(double N, int d) {
  if (d < 1 || N < d + 2) throw InvalidParams("pm_diameter_lower needs N >= d+2");
  return d / (d + 1.0) * N - d - 1.0;
}

std::vector<BoundsRow> bounds_table(const std::vector<double>& n_list, const std::vector<int>& d_list) {
  std::vector<BoundsRow> rows;
  for (double n : n_list) {
    for (int d : d_list) {
      rows.push_back({n, d, hs_upper(n, d), hs_first_order(n, d), hpm_upper(n, d), hpm_first_order(n, d)});
    }
  }
  return rows;
}

}  // namespace cforge
