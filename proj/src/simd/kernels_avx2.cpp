#include <cassert>

#include "cacount/simd.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define CACOUNT_HAVE_X86 1
#else
#define CACOUNT_HAVE_X86 0
#endif

namespace cacount::simd::avx2 {

#if CACOUNT_HAVE_X86

bool available() noexcept { return __builtin_cpu_supports("avx2"); }

__attribute__((target("avx2"))) void madd(std::span<std::uint64_t> acc,
                                          std::span<const std::uint32_t> src,
                                          std::uint32_t scale) {
  assert(acc.size() >= src.size());
  const std::size_t n = src.size();
  const __m256i s = _mm256_set1_epi64x(scale);
  std::uint64_t* out = acc.data();
  const std::uint32_t* in = src.data();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    // _mm256_mul_epu32 multiplies the low 32 bits of each 64-bit lane.
    __m256i lo = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(in + i)));
    __m256i hi = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(in + i + 4)));
    __m256i a0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i));
    __m256i a1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(out + i + 4));
    a0 = _mm256_add_epi64(a0, _mm256_mul_epu32(lo, s));
    a1 = _mm256_add_epi64(a1, _mm256_mul_epu32(hi, s));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), a0);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i + 4), a1);
  }
  const std::uint64_t s64 = scale;
  for (; i < n; ++i) out[i] += s64 * in[i];
}

__attribute__((target("avx2"))) std::uint64_t sum(std::span<const std::uint32_t> values) {
  const std::size_t n = values.size();
  const std::uint32_t* in = values.data();
  __m256i acc0 = _mm256_setzero_si256();
  __m256i acc1 = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_epi64(acc0, _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(in + i))));
    acc1 = _mm256_add_epi64(acc1, _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(in + i + 4))));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), _mm256_add_epi64(acc0, acc1));
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
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

}  // namespace cacount::simd::avx2
