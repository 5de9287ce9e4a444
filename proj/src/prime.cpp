#include "cacount/prime.hpp"

#include <string>

#include "cacount/errors.hpp"

namespace cacount {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint32_t p) : p_(p) {
  if (p < 2 || p > kMaxPrime || !is_prime(p)) {
    throw InputError("modulus must be a prime in [2, 65536], got " + std::to_string(p));
  }
}

}  // namespace cacount
