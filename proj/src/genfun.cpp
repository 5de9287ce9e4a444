#include "cacount/genfun.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "cacount/errors.hpp"
#include "cacount/evalseq.hpp"

namespace cacount {

RationalGF normalize(IntPoly num, IntPoly den, bool rigorous) {
  if (den.coeff(0) == 0) throw std::domain_error("denominator vanishes at t = 0");
  if (num.is_zero()) return {IntPoly{}, IntPoly::constant(1), rigorous};
  const IntPoly g = gcd(num, den);
  num = divexact(num, g);
  den = divexact(den, g);
  BigInt common;
  const BigInt cn = content(num), cd = content(den);
  mpz_gcd(common.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  num = divexact(num, IntPoly::constant(common));
  den = divexact(den, IntPoly::constant(common));
  const BigInt d0 = den.coeff(0);
  if (abs(d0) != 1) throw std::domain_error("reduced denominator has constant term " + d0.get_str());
  if (d0 < 0) {
    num *= BigInt(-1);
    den *= BigInt(-1);
  }
  return {std::move(num), std::move(den), rigorous};
}

std::vector<StateIndex> sparse_closure(const Scheme& s, StateIndex from) {
  const std::uint32_t top = s.digits() - 1;
  std::vector<bool> seen(s.size(), false);
  std::vector<StateIndex> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const StateIndex j = stack.back();
    stack.pop_back();
    for (StateIndex l : s.transitions[j][top]) {
      if (!seen[l]) {
        seen[l] = true;
        stack.push_back(l);
      }
    }
  }
  std::vector<StateIndex> out;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (seen[j]) out.push_back(static_cast<StateIndex>(j));
  }
  return out;
}

namespace {

// I - t*M restricted to `subset` (which is closed under digit p-1 transitions).
std::vector<std::vector<IntPoly>> transfer_matrix(const Scheme& s, const std::vector<StateIndex>& subset) {
  const std::uint32_t top = s.digits() - 1;
  const std::size_t n = subset.size();
  std::vector<std::size_t> pos(s.size(), n);
  for (std::size_t r = 0; r < n; ++r) pos[subset[r]] = r;
  std::vector<std::vector<long>> counts(n, std::vector<long>(n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (StateIndex l : s.transitions[subset[r]][top]) ++counts[r][pos[l]];
  }
  std::vector<std::vector<IntPoly>> a(n, std::vector<IntPoly>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = IntPoly::from_ints({r == c ? 1L : 0L, -counts[r][c]});
  }
  return a;
}

}  // namespace

RationalGF gf_prove(const Scheme& s, StateIndex state, GenfunOptions options) {
  if (state >= s.size()) throw InputError("state index out of range");
  const auto subset = sparse_closure(s, state);
  if (subset.size() > options.solve_threshold) {
    throw ResourceLimit("linear system has " + std::to_string(subset.size()) +
                        " unknowns, above the exact-solve threshold " + std::to_string(options.solve_threshold) +
                        "; use the guessing route");
  }
  auto a = transfer_matrix(s, subset);
  const IntPoly den = determinant(a);
  // Cramer: replace the column of `state` by the initial values c(0).
  const auto col = static_cast<std::size_t>(std::ranges::find(subset, state) - subset.begin());
  for (std::size_t r = 0; r < subset.size(); ++r) a[r][col] = IntPoly::constant(from_u64(s.base_scalar[subset[r]]));
  const IntPoly num = determinant(std::move(a));
  return normalize(num, den, true);
}

IntPoly transfer_determinant(const Scheme& s) {
  std::vector<StateIndex> all(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) all[j] = static_cast<StateIndex>(j);
  return determinant(transfer_matrix(s, all));
}

std::size_t rigorous_term_count(const Scheme& s) { return 2 * sparse_closure(s).size() + 2; }

namespace {

// Solves A x = b over Q; returns nullopt if inconsistent. Free variables are set to 0.
std::optional<std::vector<mpq_class>> solve_rational(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b,
                                                     std::size_t unknowns) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < unknowns; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  std::vector<mpq_class> x(unknowns, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
  return x;
}

IntPoly to_integer_poly(const std::vector<mpq_class>& q) {
  BigInt lcm = 1;
  for (const auto& v : q) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  std::vector<BigInt> c;
  for (const auto& v : q) {
    mpq_class scaled = v * lcm;
    c.push_back(scaled.get_num());
  }
  return IntPoly(std::move(c));
}

}  // namespace

RationalGF gf_guess(const Scheme& s, std::size_t terms) {
  if (terms < 2) throw InputError("at least 2 sparse terms are needed to guess a generating function");
  const std::size_t m = sparse_closure(s).size();
  const bool rigorous = terms >= 2 * m + 2;
  const std::size_t bound = std::min(m, (terms - 1) / 2);
  const auto c = sparse_terms(s, terms - 1);

  // Denominator D = 1 + D_1 t + ... + D_d t^d with numerator degree <= bound:
  //   sum_{i=0..d} D_i c(k-i) = 0  for bound < k < terms.
  for (std::size_t d = 0; d <= bound; ++d) {
    std::vector<std::vector<mpq_class>> a;
    std::vector<mpq_class> rhs;
    for (std::size_t k = bound + 1; k < terms; ++k) {
      std::vector<mpq_class> row(d);
      for (std::size_t i = 1; i <= d; ++i) row[i - 1] = k >= i ? mpq_class(c[k - i]) : mpq_class(0);
      a.push_back(std::move(row));
      rhs.emplace_back(-c[k]);
    }
    auto sol = solve_rational(std::move(a), std::move(rhs), d);
    if (!sol) continue;
    std::vector<mpq_class> den_q{mpq_class(1)};
    den_q.insert(den_q.end(), sol->begin(), sol->end());
    std::vector<mpq_class> num_q(bound + 1, 0);
    for (std::size_t k = 0; k <= bound && k < terms; ++k) {
      for (std::size_t i = 0; i <= std::min(k, d); ++i) num_q[k] += den_q[i] * c[k - i];
    }
    // Scale both sides by one common factor so the ratio is unchanged.
    std::vector<mpq_class> joined = num_q;
    joined.insert(joined.end(), den_q.begin(), den_q.end());
    BigInt lcm = 1;
    for (const auto& v : joined) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    for (auto& v : num_q) v *= lcm;
    for (auto& v : den_q) v *= lcm;
    RationalGF g = normalize(to_integer_poly(num_q), to_integer_poly(den_q), rigorous);
    if (!gf_verify(g, s, terms).passed) throw std::logic_error("fitted generating function disagrees with its terms");
    return g;
  }
  const std::string msg = "no rational function of degree <= " + std::to_string(bound) + " fits the sparse terms";
  if (!rigorous) throw InputError(msg + "; use at least " + std::to_string(2 * m + 2) + " terms");
  throw std::logic_error(msg);
}

std::vector<BigInt> gf_series(const RationalGF& g, std::size_t count) {
  if (g.den.coeff(0) != 1) throw std::domain_error("series expansion requires den(0) = 1");
  std::vector<BigInt> out(count);
  const auto& d = g.den.coeffs();
  for (std::size_t k = 0; k < count; ++k) {
    BigInt v = g.num.coeff(k);
    for (std::size_t i = 1; i < d.size() && i <= k; ++i) mpz_submul(v.get_mpz_t(), d[i].get_mpz_t(), out[k - i].get_mpz_t());
    out[k] = std::move(v);
  }
  return out;
}

GfVerifyResult gf_verify(const RationalGF& g, const Scheme& s, std::size_t count) {
  GfVerifyResult result;
  if (count == 0) return result;
  const auto series = gf_series(g, count);
  const auto terms = sparse_terms(s, count - 1);
  for (std::size_t k = 0; k < count; ++k) {
    if (series[k] != terms[k]) {
      result.passed = false;
      result.first_mismatch = k;
      result.expected = terms[k];
      result.got = series[k];
      break;
    }
  }
  return result;
}

std::string to_string(const RationalGF& g) {
  auto part = [](const IntPoly& q) {
    std::string text = to_string(q);
    const auto nonzero = std::ranges::count_if(q.coeffs(), [](const BigInt& c) { return c != 0; });
    return nonzero > 1 ? "(" + text + ")" : text;
  };
  return part(g.num) + "/" + part(g.den);
}

std::string to_json(const RationalGF& g) {
  auto coeffs = [](const IntPoly& q) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : q.coeffs()) {
      if (c.fits_slong_p()) {
        arr.push_back(c.get_si());
      } else {
        arr.push_back(c.get_str());
      }
    }
    return arr;
  };
  nlohmann::ordered_json out;
  out["num"] = coeffs(g.num);
  out["den"] = coeffs(g.den);
  out["rigorous"] = g.rigorous;
  return out.dump();
}

}  // namespace cacount
