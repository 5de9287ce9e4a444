#pragma once

// Rational generating functions f_j(t) = sum_k a_j(p^k - 1) t^k of the
// sparse subsequences. They satisfy the linear system
//   (I - t M_{p-1}) f = c(0),
// which is solved exactly, or fitted from terms and certified by the degree
// bound deg(num), deg(den) <= m.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cacount/bignat.hpp"
#include "cacount/intpoly.hpp"
#include "cacount/scheme.hpp"

namespace cacount {

struct RationalGF {
  IntPoly num;
  IntPoly den;  // den(0) == 1
  bool rigorous = true;

  friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

// Cancels gcd(num, den) and scales so den(0) = 1. Throws std::domain_error
// when den(0) = 0 or the reduced form has no integer representative with
// den(0) = 1.
RationalGF normalize(IntPoly num, IntPoly den, bool rigorous = true);

struct GenfunOptions {
  std::size_t solve_threshold = 64;
};

// States reachable from `from` through digit p-1 transitions, in ascending
// order. The system for f_from only involves these.
std::vector<StateIndex> sparse_closure(const Scheme& s, StateIndex from = 0);

// Exact solution for f_state. Throws ResourceLimit when the relevant system
// is larger than options.solve_threshold.
RationalGF gf_prove(const Scheme& s, StateIndex state = 0, GenfunOptions options = {});

// det(I - t M_{p-1}) over all states.
IntPoly transfer_determinant(const Scheme& s);

// Minimal number of sparse terms that makes gf_guess rigorous.
std::size_t rigorous_term_count(const Scheme& s);

// Fits num/den of minimal denominator degree to the first `terms` sparse
// terms. rigorous is set iff terms >= rigorous_term_count(s). Throws
// InputError when terms < 2 or when a short budget admits no fit, and
// std::logic_error if no fit of degree <= m exists at a rigorous budget
// (impossible for a sound scheme).
RationalGF gf_guess(const Scheme& s, std::size_t terms);

// First `count` power series coefficients; requires den(0) = 1.
std::vector<BigInt> gf_series(const RationalGF& g, std::size_t count);

struct GfVerifyResult {
  bool passed = true;
  std::optional<std::size_t> first_mismatch;
  BigInt expected;  // sparse term
  BigInt got;       // series coefficient
};

// Compares the first `count` coefficients with sparse_terms(s, count - 1).
GfVerifyResult gf_verify(const RationalGF& g, const Scheme& s, std::size_t count);

// "(1+2*t)/(1-t-2*t^2)"; single-term parts are not parenthesized.
std::string to_string(const RationalGF& g);
// {"num":[1,2],"den":[1,-1,-2],"rigorous":true}
std::string to_json(const RationalGF& g);

}  // namespace cacount
