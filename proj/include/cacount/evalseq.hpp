#pragma once

// Logarithmic-time evaluation of a_1(n) from a synthesized scheme.
//
// With n = i_0 + i_1 p + ... + i_{T-1} p^{T-1},
//   a(n) = M_{i_0} M_{i_1} ... M_{i_{T-1}} a(0),
// so the product is applied starting from the most significant digit.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cacount/bignat.hpp"
#include "cacount/scheme.hpp"

namespace cacount {

struct EvalStats {
  std::size_t matvec_products = 0;
};

// Base-p digits of n, least significant first. Empty for n = 0.
std::vector<std::uint32_t> base_digits(const BigNat& n, std::uint32_t p);

BigNat eval_at(const Scheme& s, const BigNat& n, EvalStats* stats = nullptr);
BigHistogram eval_histogram_at(const Scheme& s, const BigNat& n);

// Top-down recursion a_j(n) = sum_{l in S_{n mod p}(j)} a_l(n div p),
// memoized per (state, n div p^t). Shares no code with eval_at.
BigNat eval_recursive(const Scheme& s, const BigNat& n);

// a_1(0), ..., a_1(count-1).
std::vector<BigNat> terms_prefix(const Scheme& s, std::size_t count);
std::vector<BigHistogram> histogram_prefix(const Scheme& s, std::size_t count);

// c(k) = a_1(p^k - 1) for k = 0..max_k, via powers of M_{p-1}.
std::vector<BigNat> sparse_terms(const Scheme& s, std::size_t max_k);
// Same for every state: result[k][j] = a_j(p^k - 1).
std::vector<std::vector<BigNat>> sparse_vectors(const Scheme& s, std::size_t max_k);

// Run-length transform: product of b[L] over the maximal runs of 1-bits of n
// (L = run length). Throws InputError when a run is longer than b allows.
BigNat rlt_expand(std::span<const BigNat> b, const BigNat& n);

struct Counterexample {
  BigNat n;
  BigNat expected;
  BigNat got;
};

struct RltReport {
  bool passed = true;
  std::uint64_t checked = 0;
  std::optional<Counterexample> counterexample;  // expected = eval_at, got = rlt_expand
};

// Checks eval_at(s, n) == rlt_expand(sparse_terms(...), n) for n < limit.
// Only meaningful for p = 2; throws InputError otherwise.
RltReport rlt_check(const Scheme& s, std::uint64_t limit);

}  // namespace cacount
