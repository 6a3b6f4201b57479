#pragma once

#include <cstdint>

namespace cforge {

/// Exact C(n, k); 0 when k < 0 or k > n. Throws InvalidParams on uint64
/// overflow.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// C(n, k) in floating point, for astronomically large n.
double binomial_real(double n, int k);

/// k!
std::uint64_t factorial(int k);

}  // namespace cforge
