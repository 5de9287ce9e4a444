#pragma once

// Data-parallel inner loops of the polynomial arithmetic. Each kernel has a
// scalar reference implementation and vectorized variants; the dispatcher
// picks the widest variant the running CPU supports, once per process.
// All variants are exact and must agree bit for bit with the scalar one.

#include <cstdint>
#include <span>
#include <string_view>

namespace cacount::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

// Widest variant usable on this machine.
Isa detected_isa() noexcept;

// acc[i] += scale * src[i]  (64-bit accumulation, no reduction).
// Requires acc.size() >= src.size().
void madd(std::span<std::uint64_t> acc, std::span<const std::uint32_t> src, std::uint32_t scale);

// Sum of all elements, as 64-bit.
std::uint64_t sum(std::span<const std::uint32_t> values);

namespace scalar {
void madd(std::span<std::uint64_t> acc, std::span<const std::uint32_t> src, std::uint32_t scale);
std::uint64_t sum(std::span<const std::uint32_t> values);
}  // namespace scalar

namespace avx2 {
bool available() noexcept;
void madd(std::span<std::uint64_t> acc, std::span<const std::uint32_t> src, std::uint32_t scale);
std::uint64_t sum(std::span<const std::uint32_t> values);
}  // namespace avx2

namespace neon {
bool available() noexcept;
void madd(std::span<std::uint64_t> acc, std::span<const std::uint32_t> src, std::uint32_t scale);
std::uint64_t sum(std::span<const std::uint32_t> values);
}  // namespace neon

}  // namespace cacount::simd
