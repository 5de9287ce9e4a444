#include <doctest.h>

#include <set>

#include "cacount/errors.hpp"
#include "cacount/oracle.hpp"
#include "cacount/scheme.hpp"
#include "cacount/scheme_io.hpp"
#include "test_support.hpp"

using namespace cacount;
using cacount::testing::corpus;
using cacount::testing::corpus_scheme;
using cacount::testing::poly;

namespace {

using Transitions = std::vector<std::vector<std::vector<StateIndex>>>;

std::vector<std::string> state_texts(const Scheme& s) {
  std::vector<std::string> out;
  for (const auto& q : s.states) out.push_back(to_string(q));
  return out;
}

}  // namespace

TEST_CASE("toy scheme") {
  const Scheme s = cacount::testing::toy_scheme();
  CHECK(state_texts(s) == std::vector<std::string>{"1", "1+x"});
  CHECK(s.transitions == Transitions{{{0}, {0, 1}}, {{0, 0}, {0, 0}}});
  CHECK(s.base_scalar == std::vector<std::uint64_t>{1, 2});
  CHECK(s.base_histogram == std::vector<Histogram>{{{1}}, {{2}}});
}

TEST_CASE("P = 1+x mod 3 scheme") {
  const Scheme s = cacount::testing::p3_scheme();
  CHECK(state_texts(s) == std::vector<std::string>{"1", "2"});
  CHECK(s.transitions == Transitions{{{0}, {0, 0}, {0, 0, 1}}, {{1}, {1, 1}, {0, 1, 1}}});
  CHECK(s.base_scalar == std::vector<std::uint64_t>{1, 2});
}

TEST_CASE("monomial P gives a single state") {
  const ModPoly P = poly("x^5", "x", 2);
  const Scheme s = synthesize(P, poly("1", "x", 2));
  CHECK(state_texts(s) == std::vector<std::string>{"1"});
  CHECK(s.transitions == Transitions{{{0}, {0}}});
  CHECK(s.base_scalar == std::vector<std::uint64_t>{1});
}

TEST_CASE("synthesize errors") {
  CHECK_THROWS_AS(synthesize(poly("0", "x", 2), poly("1", "x", 2)), InputError);
  CHECK_THROWS_AS(synthesize(poly("1+x", "x", 2), poly("x-x", "x", 2)), InputError);
  CHECK_THROWS_AS(synthesize(poly("1+x", "x", 2), poly("1", "x", 3)), InputError);
  CHECK_THROWS_AS(synthesize(poly("1+x+x^2", "x", 2), poly("1", "x", 2), SynthesisOptions{1}), ResourceLimit);
}

TEST_CASE("digit matrices") {
  const Scheme toy = cacount::testing::toy_scheme();
  CHECK(digit_matrix(toy, 1).entries == std::vector<std::uint64_t>{1, 1, 2, 0});
  CHECK(digit_matrix(toy, 0).entries == std::vector<std::uint64_t>{1, 0, 2, 0});
  CHECK(digit_matrix(cacount::testing::p3_scheme(), 2).entries == std::vector<std::uint64_t>{2, 1, 1, 2});
  CHECK_THROWS_AS(digit_matrix(toy, 2), InputError);
}

TEST_CASE("degree bounds") {
  CHECK(degree_bounds(poly("1+x+x^2", "x", 2), poly("1", "x", 2)) == std::vector<Exponent>{2});
  CHECK(degree_bounds(poly("1+x", "x", 3), poly("1", "x", 3)) == std::vector<Exponent>{1});
  CHECK(degree_bounds(poly("1+x^2", "x", 3), poly("x^5", "x", 3)) == std::vector<Exponent>{5});
}

TEST_CASE("scheme invariants across the corpus") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    const Scheme s = corpus_scheme(entry);
    CHECK_NOTHROW(validate(s));
    const auto bounds = degree_bounds(s.polynomial, s.states[0]);
    std::set<ModPoly> distinct(s.states.begin(), s.states.end());
    CHECK(distinct.size() == s.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
      CHECK(is_canonical(s.states[j]));
      for (std::size_t v = 0; v < bounds.size(); ++v) CHECK(s.states[j].degree(v) <= bounds[v]);
      std::uint64_t weighted = 0;
      for (std::size_t r = 0; r < s.base_histogram[j].counts.size(); ++r) weighted += (r + 1) * s.base_histogram[j].counts[r];
      CHECK(weighted == s.base_scalar[j]);
      // Row sums of every digit matrix equal the multiset sizes.
      for (std::uint32_t i = 0; i < s.digits(); ++i) {
        const DigitMatrix M = digit_matrix(s, i);
        std::uint64_t row = 0;
        for (std::size_t l = 0; l < s.size(); ++l) row += M.at(j, l);
        CHECK(row == s.transitions[j][i].size());
      }
    }
    // a(0) is a fixed point of M_0.
    const DigitMatrix M0 = digit_matrix(s, 0);
    for (std::size_t j = 0; j < s.size(); ++j) {
      std::uint64_t v = 0;
      for (std::size_t l = 0; l < s.size(); ++l) v += M0.at(j, l) * s.base_scalar[l];
      CHECK(v == s.base_scalar[j]);
    }
  }
}

TEST_CASE("arbitrary seeds and wider primes stay sound") {
  struct Case {
    const char* P;
    const char* q0;
    const char* vars;
    std::uint32_t p;
  };
  for (const Case& c : {Case{"1+x+x^2", "1+x^3", "x", 2}, Case{"1+2*x+x^3", "2+x", "x", 5},
                        Case{"1+x+y", "1", "x,y", 3}, Case{"x^-1+1+x", "1", "x", 7}}) {
    CAPTURE(c.P);
    const Scheme s = synthesize(poly(c.P, c.vars, c.p), poly(c.q0, c.vars, c.p));
    const auto report = verify_scheme(s, 40);
    CHECK(report.passed());
  }
}

TEST_CASE("synthesis is deterministic") {
  for (const auto& entry : corpus()) {
    CHECK(scheme_to_json(corpus_scheme(entry)) == scheme_to_json(corpus_scheme(entry)));
  }
}

TEST_CASE("scheme JSON") {
  SUBCASE("toy fixture text") {
    const std::string expected =
        "{\n"
        "  \"p\": 2,\n"
        "  \"vars\": [\"x\"],\n"
        "  \"polynomial\": \"1+x+x^2\",\n"
        "  \"q0\": \"1\",\n"
        "  \"states\": [\n"
        "    \"1\",\n"
        "    \"1+x\"\n"
        "  ],\n"
        "  \"transitions\": [\n"
        "    [[1],[1,2]],\n"
        "    [[1,1],[1,1]]\n"
        "  ],\n"
        "  \"base_scalar\": [1,2],\n"
        "  \"base_histogram\": [[1],[2]]\n"
        "}\n";
    CHECK(scheme_to_json(cacount::testing::toy_scheme()) == expected);
  }
  SUBCASE("round trip is byte identical") {
    for (const auto& entry : corpus()) {
      const std::string text = scheme_to_json(corpus_scheme(entry));
      CHECK(scheme_to_json(scheme_from_json(text)) == text);
    }
  }
  SUBCASE("malformed files are rejected") {
    const std::string good = scheme_to_json(cacount::testing::toy_scheme());
    auto replaced = [&](const std::string& from, const std::string& to) {
      std::string t = good;
      t.replace(t.find(from), from.size(), to);
      return t;
    };
    CHECK_THROWS_AS(scheme_from_json("not json"), InputError);
    CHECK_THROWS_AS(scheme_from_json("[]"), InputError);
    CHECK_THROWS_AS(scheme_from_json(replaced("[[1],[1,2]]", "[[1],[1,3]]")), InputError);
    CHECK_THROWS_AS(scheme_from_json(replaced("[[1],[1,2]]", "[[1],[2,1]]")), InputError);
    CHECK_THROWS_AS(scheme_from_json(replaced("[[1],[1,2]]", "[[1]]")), InputError);
    CHECK_THROWS_AS(scheme_from_json(replaced("\"p\": 2", "\"p\": 4")), InputError);
    CHECK_THROWS_AS(scheme_from_json(replaced("\"1+x\"\n", "\"x+x^2\"\n")), InputError);
    CHECK_THROWS_AS(scheme_from_json(replaced("\"base_scalar\": [1,2]", "\"base_scalar\": [1]")), InputError);
    CHECK_THROWS_AS(scheme_from_json(replaced("\"q0\": \"1\"", "\"q0\": \"1+x\"")), InputError);
    CHECK_THROWS_AS(scheme_from_json(replaced("\"vars\": [\"x\"],\n", "")), InputError);
  }
}
