#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cacount/errors.hpp"
#include "cacount/evalseq.hpp"
#include "cacount/genfun.hpp"
#include "test_support.hpp"

using namespace cacount;
using cacount::testing::corpus;
using cacount::testing::corpus_scheme;

namespace {

IntPoly ip(std::initializer_list<long> c) { return IntPoly::from_ints(c); }

std::vector<BigInt> ints(std::initializer_list<long> values) {
  std::vector<BigInt> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

// Leibniz expansion; test-only reference for the Bareiss determinant.
IntPoly leibniz(const std::vector<std::vector<IntPoly>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  IntPoly total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    IntPoly term = IntPoly::constant(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term = term * m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("IntPoly basics") {
  CHECK(to_string(ip({1, 2})) == "1+2*t");
  CHECK(to_string(ip({1, -1, -2})) == "1-t-2*t^2");
  CHECK(to_string(ip({0, 0, 3})) == "3*t^2");
  CHECK(to_string(ip({-1})) == "-1");
  CHECK(to_string(IntPoly{}) == "0");
  CHECK(ip({1, 1}) * ip({1, -2}) == ip({1, -1, -2}));
  CHECK(divexact(ip({1, -1, -2}), ip({1, 1})) == ip({1, -2}));
  CHECK_THROWS_AS(divexact(ip({1, 0, 1}), ip({1, 1})), std::domain_error);
  CHECK(gcd(ip({1, -1, -2}), ip({2, 2})) == ip({1, 1}));
  CHECK(gcd(ip({1, 2}), ip({1, -1, -2})) == ip({1}));
  CHECK(gcd(IntPoly{}, ip({0, 4})) == ip({0, 1}));
}

TEST_CASE("Bareiss determinant matches Leibniz expansion") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> coeff(-4, 4);
  std::uniform_int_distribution<int> degree(-1, 3);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
      for (auto& row : m) {
        for (auto& cell : row) {
          std::vector<BigInt> c(static_cast<std::size_t>(degree(rng) + 1));
          for (auto& v : c) v = coeff(rng);
          cell = IntPoly(std::move(c));
        }
      }
      CHECK(determinant(m) == leibniz(m));
    }
  }
}

TEST_CASE("gf_prove") {
  const Scheme toy = cacount::testing::toy_scheme();
  const RationalGF f1 = gf_prove(toy);
  CHECK(f1.num == ip({1, 2}));
  CHECK(f1.den == ip({1, -1, -2}));
  CHECK(f1.rigorous);
  CHECK(to_string(f1) == "(1+2*t)/(1-t-2*t^2)");

  const RationalGF f2 = gf_prove(toy, 1);
  CHECK(f2.num == ip({2}));
  CHECK(f2.den == ip({1, -1, -2}));

  const RationalGF p3 = gf_prove(cacount::testing::p3_scheme());
  CHECK(p3.num == ip({1}));
  CHECK(p3.den == ip({1, -4, 3}));
  CHECK(to_string(p3) == "1/(1-4*t+3*t^2)");

  CHECK_THROWS_AS(gf_prove(toy, 0, GenfunOptions{1}), ResourceLimit);
  CHECK_THROWS_AS(gf_prove(toy, 5), InputError);
}

TEST_CASE("gf_guess") {
  const Scheme toy = cacount::testing::toy_scheme();
  const RationalGF g = gf_guess(toy, 8);
  CHECK(g == gf_prove(toy));
  CHECK(g.rigorous);

  CHECK(gf_guess(cacount::testing::p3_scheme(), 8) == gf_prove(cacount::testing::p3_scheme()));

  const ModPoly mono = cacount::testing::poly("x^3", "x", 2);
  const Scheme constant = synthesize(mono, ModPoly::constant(mono.modulus(), mono.vars(), 1));
  const RationalGF c = gf_guess(constant, 4);
  CHECK(c.num == ip({1}));
  CHECK(c.den == ip({1, -1}));

  const RationalGF loose = gf_guess(toy, 5);
  CHECK(loose == RationalGF{IntPoly::from_ints({1, 2}), IntPoly::from_ints({1, -1, -2}), false});
  CHECK_FALSE(loose.rigorous);
  CHECK_THROWS_AS(gf_guess(toy, 4), InputError);
  CHECK_THROWS_AS(gf_guess(toy, 1), InputError);
}

TEST_CASE("gf_series and gf_verify") {
  CHECK(gf_series({ip({1, 2}), ip({1, -1, -2})}, 6) == ints({1, 3, 5, 11, 21, 43}));
  CHECK(gf_series({ip({1}), ip({1, -1})}, 4) == ints({1, 1, 1, 1}));
  CHECK(gf_series({ip({1}), ip({1, -4, 3})}, 4) == ints({1, 4, 13, 40}));
  CHECK_THROWS_AS(gf_series({ip({1}), ip({2, -1})}, 4), std::domain_error);

  const Scheme toy = cacount::testing::toy_scheme();
  const RationalGF g = gf_prove(toy);
  CHECK(gf_verify(g, toy, 20).passed);

  const RationalGF bad{ip({1, 3}), ip({1, -1, -2})};
  const auto v = gf_verify(bad, toy, 20);
  CHECK_FALSE(v.passed);
  REQUIRE(v.first_mismatch);
  CHECK(*v.first_mismatch == 1);
  CHECK(v.expected == 3);
  CHECK(v.got == 4);
}

TEST_CASE("normalization") {
  const RationalGF g = normalize(ip({2, 2}), ip({2, 0, -2}));  // 2(1+t) / 2(1-t)(1+t)
  CHECK(g.num == ip({1}));
  CHECK(g.den == ip({1, -1}));
  const RationalGF neg = normalize(ip({-1}), ip({-1, 1}));
  CHECK(neg.num == ip({1}));
  CHECK(neg.den == ip({1, -1}));
  CHECK(normalize(g.num, g.den) == g);
  CHECK_THROWS_AS(normalize(ip({1}), ip({0, 1})), std::domain_error);
}

TEST_CASE("generating function invariants across the corpus") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    const Scheme s = corpus_scheme(entry);
    const std::size_t m = s.size();
    const RationalGF proved = gf_prove(s);
    CHECK(gf_guess(s, 2 * m + 2) == proved);
    CHECK(gf_series(proved, 2 * m + 4) == sparse_terms(s, 2 * m + 3));
    CHECK(rem_primitive(transfer_determinant(s), proved.den).is_zero());
    CHECK(normalize(proved.num, proved.den) == proved);
    CHECK(gcd(proved.num, proved.den).degree() == 0);
    CHECK(proved.den.coeff(0) == 1);
  }
}

TEST_CASE("GF JSON form") {
  CHECK(to_json(gf_prove(cacount::testing::toy_scheme())) == R"({"num":[1,2],"den":[1,-1,-2],"rigorous":true})");
}
