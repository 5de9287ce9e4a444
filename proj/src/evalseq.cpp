#include "cacount/evalseq.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "cacount/errors.hpp"

namespace cacount {

BigNat parse_bignat(std::string_view text) {
  if (text.empty() || !std::ranges::all_of(text, [](char c) { return c >= '0' && c <= '9'; })) {
    throw InputError("expected a nonnegative decimal integer, got '" + std::string(text) + "'");
  }
  return BigNat(std::string(text), 10);
}

namespace {

using Vec = std::vector<BigNat>;

// out[j] = sum_{l in S_digit(j)} in[l]
void apply_digit(const Scheme& s, std::uint32_t digit, const Vec& in, Vec& out) {
  for (std::size_t j = 0; j < s.size(); ++j) {
    BigNat acc = 0;
    for (StateIndex l : s.transitions[j][digit]) acc += in[l];
    out[j] = std::move(acc);
  }
}

Vec base_vector(const Scheme& s) {
  Vec v(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) v[j] = from_u64(s.base_scalar[j]);
  return v;
}


}  // namespace

std::vector<std::uint32_t> base_digits(const BigNat& n, std::uint32_t p) {
  std::vector<std::uint32_t> digits;
  BigNat rest = n;
  while (rest != 0) {
    digits.push_back(static_cast<std::uint32_t>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p)));
  }
  return digits;
}

BigNat eval_at(const Scheme& s, const BigNat& n, EvalStats* stats) {
  if (n < 0) throw InputError("index must be nonnegative");
  const auto digits = base_digits(n, s.digits());
  Vec v = base_vector(s);
  Vec next(s.size());
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    apply_digit(s, *it, v, next);
    v.swap(next);
    if (stats) ++stats->matvec_products;
  }
  return v[0];
}

BigHistogram eval_histogram_at(const Scheme& s, const BigNat& n) {
  if (n < 0) throw InputError("index must be nonnegative");
  const std::size_t m = s.size();
  const std::size_t width = s.digits() - 1;
  std::vector<BigHistogram> h(m, BigHistogram(width));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t r = 0; r < width; ++r) h[j][r] = from_u64(s.base_histogram[j].counts[r]);
  }
  std::vector<BigHistogram> next(m, BigHistogram(width));
  const auto digits = base_digits(n, s.digits());
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t r = 0; r < width; ++r) next[j][r] = 0;
      for (StateIndex l : s.transitions[j][*it]) {
        for (std::size_t r = 0; r < width; ++r) next[j][r] += h[l][r];
      }
    }
    h.swap(next);
  }
  return h[0];
}

BigNat eval_recursive(const Scheme& s, const BigNat& n) {
  if (n < 0) throw InputError("index must be nonnegative");
  const std::uint32_t p = s.digits();
  // levels[t] = n div p^t; the recursion only ever visits these indices.
  std::vector<BigNat> levels{n};
  while (levels.back() != 0) levels.push_back(levels.back() / p);
  std::vector<std::vector<std::optional<BigNat>>> memo(levels.size(), std::vector<std::optional<BigNat>>(s.size()));

  std::function<const BigNat&(StateIndex, std::size_t)> a = [&](StateIndex j, std::size_t t) -> const BigNat& {
    auto& slot = memo[t][j];
    if (!slot) {
      if (levels[t] == 0) {
        slot = from_u64(s.base_scalar[j]);
      } else {
        const BigNat r = levels[t] % p;
        const auto digit = static_cast<std::uint32_t>(r.get_ui());
        BigNat acc = 0;
        for (StateIndex l : s.transitions[j][digit]) acc += a(l, t + 1);
        slot = std::move(acc);
      }
    }
    return *slot;
  };
  return a(0, 0);
}

namespace {

// Full state vectors for 0 <= n < count, in increasing n; vec(n) is derived
// from vec(n div p), which always precedes it.
std::vector<Vec> state_vectors(const Scheme& s, std::size_t count) {
  std::vector<Vec> vecs;
  vecs.reserve(count);
  const std::uint32_t p = s.digits();
  for (std::size_t n = 0; n < count; ++n) {
    if (n == 0) {
      vecs.push_back(base_vector(s));
    } else {
      Vec v(s.size());
      apply_digit(s, static_cast<std::uint32_t>(n % p), vecs[n / p], v);
      vecs.push_back(std::move(v));
    }
  }
  return vecs;
}

constexpr std::size_t kPrefixCellBudget = std::size_t{1} << 22;

}  // namespace

std::vector<BigNat> terms_prefix(const Scheme& s, std::size_t count) {
  std::vector<BigNat> out;
  out.reserve(count);
  if (count == 0) return out;
  const std::uint32_t p = s.digits();
  const std::size_t parents = (count + p - 1) / p;
  if (parents * s.size() > kPrefixCellBudget) {
    for (std::size_t n = 0; n < count; ++n) out.push_back(eval_at(s, from_u64(n)));
    return out;
  }
  const auto vecs = state_vectors(s, parents);
  for (std::size_t n = 0; n < count; ++n) {
    if (n == 0) {
      out.push_back(vecs[0][0]);
      continue;
    }
    BigNat acc = 0;
    for (StateIndex l : s.transitions[0][n % p]) acc += vecs[n / p][l];
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<BigHistogram> histogram_prefix(const Scheme& s, std::size_t count) {
  std::vector<BigHistogram> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.push_back(eval_histogram_at(s, from_u64(n)));
  return out;
}

std::vector<std::vector<BigNat>> sparse_vectors(const Scheme& s, std::size_t max_k) {
  const std::uint32_t top = s.digits() - 1;
  std::vector<Vec> out{base_vector(s)};
  for (std::size_t k = 1; k <= max_k; ++k) {
    Vec v(s.size());
    apply_digit(s, top, out.back(), v);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<BigNat> sparse_terms(const Scheme& s, std::size_t max_k) {
  std::vector<BigNat> out;
  for (auto& v : sparse_vectors(s, max_k)) out.push_back(std::move(v[0]));
  return out;
}

BigNat rlt_expand(std::span<const BigNat> b, const BigNat& n) {
  if (n < 0) throw InputError("index must be nonnegative");
  BigNat product = 1;
  const mp_bitcnt_t bits = n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
  std::size_t run = 0;
  for (mp_bitcnt_t i = 0; i <= bits; ++i) {
    if (i < bits && mpz_tstbit(n.get_mpz_t(), i)) {
      ++run;
    } else if (run != 0) {
      if (run >= b.size()) {
        throw InputError("run of " + std::to_string(run) + " ones exceeds the available sparse terms");
      }
      product *= b[run];
      run = 0;
    }
  }
  return product;
}

RltReport rlt_check(const Scheme& s, std::uint64_t limit) {
  if (s.digits() != 2) throw InputError("the run-length transform check requires p = 2");
  RltReport report;
  if (limit == 0) return report;
  // Longest possible run below limit has bit_width(limit - 1) ones.
  const std::size_t max_k = static_cast<std::size_t>(std::bit_width(limit - 1)) + 1;
  const auto b = sparse_terms(s, max_k);
  const auto a = terms_prefix(s, static_cast<std::size_t>(limit));
  for (std::uint64_t n = 0; n < limit; ++n) {
    const BigNat idx = from_u64(n);
    BigNat via_rlt = rlt_expand(b, idx);
    ++report.checked;
    if (via_rlt != a[n]) {
      report.passed = false;
      report.counterexample = Counterexample{idx, a[n], std::move(via_rlt)};
      break;
    }
  }
  return report;
}

}  // namespace cacount
