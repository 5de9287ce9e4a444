#pragma once

// Synthesis of the finite base-p recurrence scheme for
//   a_Q(n) = functional_scalar(Q * P^n mod p).
// Each state Q_j is a canonical polynomial; for each digit i the multiset
// S_i(j) lists the states whose sequences sum to a_j(p*n + i).

#include <cstdint>
#include <vector>

#include "cacount/modpoly.hpp"

namespace cacount {

using StateIndex = std::uint32_t;  // 0-based; state 0 is the seed Q_1

struct Scheme {
  PrimeModulus p;
  VarList vars;
  ModPoly polynomial;  // canonical P
  ModPoly q0;          // canonical seed, equal to states[0]
  std::vector<ModPoly> states;
  // transitions[j][i] is the sorted multiset S_i(j), duplicates retained.
  std::vector<std::vector<std::vector<StateIndex>>> transitions;
  std::vector<std::uint64_t> base_scalar;  // a_j(0)
  std::vector<Histogram> base_histogram;

  std::size_t size() const noexcept { return states.size(); }
  std::uint32_t digits() const noexcept { return p.value(); }
};

struct SynthesisOptions {
  std::size_t max_states = 100000;
};

// Worklist closure seeded with canonicalize(q0). Digits are processed in
// ascending order and residue classes in lexicographic order, which fixes the
// state numbering. Throws InputError on zero input, ResourceLimit when the
// state count exceeds options.max_states.
Scheme synthesize(const ModPoly& polynomial, const ModPoly& q0, SynthesisOptions options = {});

// Multiplicity matrix of S_digit: entries[j * m + l] = multiplicity of l in S_digit(j).
struct DigitMatrix {
  std::uint32_t digit;
  std::size_t m;
  std::vector<std::uint64_t> entries;

  std::uint64_t at(std::size_t row, std::size_t col) const { return entries[row * m + col]; }
};

DigitMatrix digit_matrix(const Scheme& s, std::uint32_t digit);

// D_v = max(deg_v q0, deg_v polynomial): no state ever exceeds it.
std::vector<Exponent> degree_bounds(const ModPoly& polynomial, const ModPoly& q0);

// Structural invariants (index ranges, sorted multisets, canonical distinct
// states, vector lengths). Throws InputError naming the first violation.
void validate(const Scheme& s);

}  // namespace cacount
