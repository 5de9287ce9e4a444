#include "cacount/simd.hpp"

namespace cacount::simd {

namespace {

struct KernelTable {
  Isa isa;
  void (*madd)(std::span<std::uint64_t>, std::span<const std::uint32_t>, std::uint32_t);
  std::uint64_t (*sum)(std::span<const std::uint32_t>);
};

KernelTable select() noexcept {
  if (avx2::available()) return {Isa::avx2, &avx2::madd, &avx2::sum};
  if (neon::available()) return {Isa::neon, &neon::madd, &neon::sum};
  return {Isa::scalar, &scalar::madd, &scalar::sum};
}

const KernelTable& table() noexcept {
  static const KernelTable t = select();
  return t;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    case Isa::scalar: break;
  }
  return "scalar";
}

Isa detected_isa() noexcept { return table().isa; }

void madd(std::span<std::uint64_t> acc, std::span<const std::uint32_t> src, std::uint32_t scale) {
  table().madd(acc, src, scale);
}

std::uint64_t sum(std::span<const std::uint32_t> values) { return table().sum(values); }

}  // namespace cacount::simd
