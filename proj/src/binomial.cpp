#include "cforge/binomial.hpp"

#include <numeric>
#include <string>

#include "cforge/errors.hpp"

namespace cforge {

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * m / i is integral; cancel gcd(r, i) first so the product cannot
    // overflow unless the result does.
    auto m = static_cast<std::uint64_t>(n - k + i);
    auto div = static_cast<std::uint64_t>(i);
    const std::uint64_t g = std::gcd(r, div);
    r /= g;
    div /= g;
    m /= div;
    if (__builtin_mul_overflow(r, m, &r)) {
      throw InvalidParams("C(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows");
    }
  }
  return r;
}

double binomial_real(double n, int k) {
  if (k < 0 || static_cast<double>(k) > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t factorial(int k) {
  if (k < 0 || k > 20) throw InvalidParams("factorial argument out of range: " + std::to_string(k));
  std::uint64_t r = 1;
  for (int i = 2; i <= k; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace cforge
