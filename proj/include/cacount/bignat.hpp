#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cacount {

// Exact integers of unbounded size. Counts are nonnegative; generating
// function coefficients may be negative, so the same type serves both.
using BigNat = mpz_class;
using BigInt = mpz_class;

// Per-residue coefficient counts at one index n (length p-1).
using BigHistogram = std::vector<BigNat>;

// Accepts a nonempty string of decimal digits; throws InputError otherwise.
BigNat parse_bignat(std::string_view text);

inline std::string to_decimal(const mpz_class& v) { return v.get_str(10); }

}  // namespace cacount

namespace cacount {

inline BigNat from_u64(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 required");
  return BigNat(static_cast<unsigned long>(v));
}

}  // namespace cacount
