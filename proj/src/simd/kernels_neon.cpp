#include <cassert>

#include "cacount/simd.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace cacount::simd::neon {

#if defined(__aarch64__)

// Advanced SIMD is mandatory on AArch64.
bool available() noexcept { return true; }

void madd(std::span<std::uint64_t> acc, std::span<const std::uint32_t> src, std::uint32_t scale) {
  assert(acc.size() >= src.size());
  const std::size_t n = src.size();
  std::uint64_t* out = acc.data();
  const std::uint32_t* in = src.data();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    uint32x4_t v = vld1q_u32(in + i);
    uint64x2_t a0 = vld1q_u64(out + i);
    uint64x2_t a1 = vld1q_u64(out + i + 2);
    a0 = vmlal_n_u32(a0, vget_low_u32(v), scale);
    a1 = vmlal_n_u32(a1, vget_high_u32(v), scale);
    vst1q_u64(out + i, a0);
    vst1q_u64(out + i + 2, a1);
  }
  const std::uint64_t s64 = scale;
  for (; i < n; ++i) out[i] += s64 * in[i];
}

std::uint64_t sum(std::span<const std::uint32_t> values) {
  const std::size_t n = values.size();
  const std::uint32_t* in = values.data();
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = vpadalq_u32(acc, vld1q_u32(in + i));
  std::uint64_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
  for (; i < n; ++i) total += in[i];
  return total;
}

#else

bool available() noexcept { return false; }
void madd(std::span<std::uint64_t> acc, std::span<const std::uint32_t> src, std::uint32_t scale) {
  scalar::madd(acc, src, scale);
}
std::uint64_t sum(std::span<const std::uint32_t> values) { return scalar::sum(values); }

#endif

}  // namespace cacount::simd::neon
