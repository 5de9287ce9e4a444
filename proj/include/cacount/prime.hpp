#pragma once

#include <compare>
#include <cstdint>

namespace cacount {

inline constexpr std::uint32_t kMaxPrime = 1u << 16;

bool is_prime(std::uint64_t n) noexcept;

// A prime 2 <= p <= 2^16. Construction throws InputError otherwise.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }
  operator std::uint32_t() const noexcept { return p_; }

  friend bool operator==(PrimeModulus, PrimeModulus) = default;
  friend auto operator<=>(PrimeModulus, PrimeModulus) = default;

 private:
  std::uint32_t p_;
};

}  // namespace cacount
