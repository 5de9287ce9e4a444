#include <doctest.h>

#include <random>
#include <vector>

#include "cacount/simd.hpp"

using namespace cacount;

namespace {

using MaddFn = void (*)(std::span<std::uint64_t>, std::span<const std::uint32_t>, std::uint32_t);
using SumFn = std::uint64_t (*)(std::span<const std::uint32_t>);

struct Variant {
  const char* name;
  bool available;
  MaddFn madd;
  SumFn sum;
};

std::vector<Variant> variants() {
  return {
      {"avx2", simd::avx2::available(), &simd::avx2::madd, &simd::avx2::sum},
      {"neon", simd::neon::available(), &simd::neon::madd, &simd::neon::sum},
      {"dispatch", true, &simd::madd, &simd::sum},
  };
}

}  // namespace

TEST_CASE("detected ISA is usable") {
  MESSAGE("kernels dispatch to " << simd::isa_name(simd::detected_isa()));
  const simd::Isa isa = simd::detected_isa();
  if (isa == simd::Isa::avx2) CHECK(simd::avx2::available());
  if (isa == simd::Isa::neon) CHECK(simd::neon::available());
}

TEST_CASE("vector kernels match the scalar reference") {
  std::mt19937_64 rng(42);
  for (const Variant& v : variants()) {
    if (!v.available) {
      MESSAGE(v.name << " not available on this machine; skipped");
      continue;
    }
    CAPTURE(v.name);
    for (std::size_t len : {0u, 1u, 3u, 4u, 7u, 8u, 9u, 15u, 16u, 17u, 63u, 100u, 1031u}) {
      for (std::uint32_t max_value : {1u, 2u, 65520u, 0xffffffffu}) {
        std::uniform_int_distribution<std::uint32_t> value(0, max_value);
        std::vector<std::uint32_t> src(len);
        for (auto& x : src) x = value(rng);
        std::vector<std::uint64_t> acc_ref(len + 5), acc(len + 5);
        for (std::size_t i = 0; i < acc.size(); ++i) acc_ref[i] = acc[i] = rng() >> 2;
        const std::uint32_t scale = value(rng);

        simd::scalar::madd(acc_ref, src, scale);
        v.madd(acc, src, scale);
        CHECK(acc == acc_ref);
        CHECK(v.sum(src) == simd::scalar::sum(src));
      }
    }
  }
}

TEST_CASE("madd leaves the accumulator tail untouched") {
  std::vector<std::uint32_t> src(13, 3);
  for (const Variant& v : variants()) {
    if (!v.available) continue;
    std::vector<std::uint64_t> acc(20, 1);
    v.madd(acc, src, 2);
    for (std::size_t i = 0; i < acc.size(); ++i) CHECK(acc[i] == (i < 13 ? 7u : 1u));
  }
}
