#include <cassert>

#include "cacount/simd.hpp"

namespace cacount::simd::scalar {

void madd(std::span<std::uint64_t> acc, std::span<const std::uint32_t> src, std::uint32_t scale) {
  assert(acc.size() >= src.size());
  const std::uint64_t s = scale;
  for (std::size_t i = 0; i < src.size(); ++i) acc[i] += s * src[i];
}

std::uint64_t sum(std::span<const std::uint32_t> values) {
  std::uint64_t total = 0;
  for (std::uint32_t v : values) total += v;
  return total;
}

}  // namespace cacount::simd::scalar
