#include "cacount/scheme.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "cacount/errors.hpp"

namespace cacount {

Scheme synthesize(const ModPoly& polynomial, const ModPoly& q0, SynthesisOptions options) {
  if (polynomial.is_zero()) throw InputError("polynomial is zero mod p");
  if (q0.is_zero()) throw InputError("q0 is zero mod p");
  if (polynomial.modulus() != q0.modulus()) throw InputError("polynomial and q0 use different moduli");
  if (!(polynomial.vars() == q0.vars())) throw InputError("polynomial and q0 use different variables");

  const PrimeModulus p = polynomial.modulus();
  const ModPoly P = canonicalize(polynomial);
  const ModPoly seed = canonicalize(q0);

  Scheme s{p, polynomial.vars(), P, seed, {}, {}, {}, {}};
  std::map<ModPoly, StateIndex> index;
  auto intern = [&](ModPoly q) -> StateIndex {
    auto [it, inserted] = index.try_emplace(q, static_cast<StateIndex>(s.states.size()));
    if (inserted) {
      if (s.states.size() >= options.max_states) {
        throw ResourceLimit("state count exceeds max_states=" + std::to_string(options.max_states));
      }
      s.states.push_back(std::move(q));
    }
    return it->second;
  };
  intern(seed);

  for (std::size_t j = 0; j < s.states.size(); ++j) {
    std::vector<std::vector<StateIndex>> row(p.value());
    ModPoly product = s.states[j];
    for (std::uint32_t digit = 0; digit < p.value(); ++digit) {
      if (digit != 0) product = mul_mod(product, P);
      for (const auto& [alpha, part] : frobenius_decompose(product)) {
        row[digit].push_back(intern(canonicalize(part)));
      }
      std::ranges::sort(row[digit]);
    }
    s.transitions.push_back(std::move(row));
  }

  for (const ModPoly& q : s.states) {
    s.base_scalar.push_back(functional_scalar(q));
    s.base_histogram.push_back(functional_histogram(q));
  }
  return s;
}

DigitMatrix digit_matrix(const Scheme& s, std::uint32_t digit) {
  if (digit >= s.digits()) {
    throw InputError("digit " + std::to_string(digit) + " out of range for p=" + std::to_string(s.digits()));
  }
  const std::size_t m = s.size();
  DigitMatrix M{digit, m, std::vector<std::uint64_t>(m * m, 0)};
  for (std::size_t j = 0; j < m; ++j) {
    for (StateIndex l : s.transitions[j][digit]) ++M.entries[j * m + l];
  }
  return M;
}

std::vector<Exponent> degree_bounds(const ModPoly& polynomial, const ModPoly& q0) {
  if (!(polynomial.vars() == q0.vars())) throw InputError("polynomial and q0 use different variables");
  std::vector<Exponent> bounds(polynomial.nvars());
  for (std::size_t v = 0; v < bounds.size(); ++v) bounds[v] = std::max(q0.degree(v), polynomial.degree(v));
  return bounds;
}

void validate(const Scheme& s) {
  const std::size_t m = s.states.size();
  const std::uint32_t p = s.digits();
  if (m == 0) throw InputError("scheme has no states");
  if (s.transitions.size() != m) throw InputError("transitions must have one entry per state");
  if (s.base_scalar.size() != m) throw InputError("base_scalar must have one entry per state");
  if (s.base_histogram.size() != m) throw InputError("base_histogram must have one entry per state");
  if (!(s.polynomial.vars() == s.vars) || s.polynomial.modulus() != s.p) {
    throw InputError("polynomial does not match scheme variables or modulus");
  }
  if (!is_canonical(s.polynomial)) throw InputError("polynomial is not canonical");
  if (!(s.q0 == s.states[0])) throw InputError("q0 must equal the first state");

  std::set<ModPoly> seen;
  for (std::size_t j = 0; j < m; ++j) {
    const std::string where = "state " + std::to_string(j + 1);
    if (!is_canonical(s.states[j])) throw InputError(where + " is not canonical");
    if (!seen.insert(s.states[j]).second) throw InputError(where + " duplicates an earlier state");
    if (s.transitions[j].size() != p) throw InputError(where + " must have " + std::to_string(p) + " digit lists");
    for (const auto& multiset : s.transitions[j]) {
      if (!std::ranges::is_sorted(multiset)) throw InputError(where + " has an unsorted transition list");
      for (StateIndex l : multiset) {
        if (l >= m) throw InputError(where + " references a nonexistent state");
      }
    }
    if (s.base_histogram[j].counts.size() != p - 1) {
      throw InputError(where + " histogram must have p-1 entries");
    }
  }
}

}  // namespace cacount
