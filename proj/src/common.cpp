#include "towerkit/common.hpp"

namespace towerkit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n) {
  if (n < 2) return {0, 0};
  std::uint64_t base = 0;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      base = d;
      break;
    }
  }
  if (base == 0) return {n, 1};
  unsigned exponent = 0;
  while (n % base == 0) {
    n /= base;
    ++exponent;
  }
  if (n != 1) return {0, 0};
  return {base, exponent};
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace towerkit
