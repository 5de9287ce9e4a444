#pragma once

// Brute-force ground truth: expands Q0 * P^n by repeated multiplication on a
// dense coefficient grid, reducing after every step. Deliberately independent
// of ModPoly arithmetic and of the scheme machinery it referees.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cacount/evalseq.hpp"
#include "cacount/genfun.hpp"
#include "cacount/modpoly.hpp"
#include "cacount/scheme.hpp"

namespace cacount {

struct OracleOptions {
  std::uint64_t term_budget = 10'000'000;  // dense grid cells
};

struct OracleSample {
  std::uint64_t scalar = 0;     // sum of reduced coefficients
  std::uint64_t nonzero = 0;    // number of nonzero coefficients (ON cells for p = 2)
  Histogram histogram;
};

// Samples for n = 0..count-1. Throws ResourceLimit when the grid needed for
// n = count-1 exceeds the budget.
std::vector<OracleSample> brute_sequence(const ModPoly& P, const ModPoly& q0, std::uint64_t count,
                                         OracleOptions options = {});

std::uint64_t brute_scalar(const ModPoly& P, const ModPoly& q0, std::uint64_t n, OracleOptions options = {});
Histogram brute_histogram(const ModPoly& P, const ModPoly& q0, std::uint64_t n, OracleOptions options = {});

struct CheckResult {
  std::string name;
  bool passed = true;
  bool informational = false;  // failures do not fail the report
  std::string detail;
  std::optional<Counterexample> counterexample;
};

struct VerificationReport {
  std::string scheme_id;
  std::vector<CheckResult> checks;

  // True when every non-informational check passed.
  bool passed() const;
};

// Runs, in order: oracle agreement for state 1 (scalar and histogram) on
// n < nmax; the per-state recurrence identity for p*n + i < nmax; the digit-0
// fixed point; sparse agreement; series agreement of `gf` if given; and for
// p = 2 the run-length transform check (informational).
VerificationReport verify_scheme(const Scheme& s, std::uint64_t nmax, const std::optional<RationalGF>& gf = std::nullopt,
                                 OracleOptions options = {});

std::string render_text(const VerificationReport& r);
std::string render_json(const VerificationReport& r);

}  // namespace cacount
