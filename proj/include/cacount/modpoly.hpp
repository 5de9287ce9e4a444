#pragma once

// Sparse multivariate polynomials with coefficients in Z/pZ.
//
// Terms are stored flat: term i owns exponents [i*k, (i+1)*k) and one
// coefficient in {1, ..., p-1}. Terms are kept sorted lexicographically by
// exponent vector (first declared variable most significant), so equality,
// ordering and serialization are all byte-deterministic.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cacount/prime.hpp"

namespace cacount {

using Exponent = std::int32_t;
using ExponentVector = std::vector<Exponent>;

// Shared, immutable list of variable names.
class VarList {
 public:
  VarList() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit VarList(std::vector<std::string> names);

  const std::vector<std::string>& names() const noexcept { return *names_; }
  std::size_t size() const noexcept { return names_->size(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }

  friend bool operator==(const VarList& a, const VarList& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

struct Term {
  ExponentVector exps;
  std::uint64_t coeff;  // any integer; reduced mod p on construction
};

// Counts of coefficients per nonzero residue: counts[i-1] = #terms with coefficient i.
struct Histogram {
  std::vector<std::uint64_t> counts;

  friend bool operator==(const Histogram&, const Histogram&) = default;
};

class ModPoly {
 public:
  ModPoly(PrimeModulus p, VarList vars);

  static ModPoly constant(PrimeModulus p, VarList vars, std::uint64_t c);
  static ModPoly monomial(PrimeModulus p, VarList vars, std::span<const Exponent> exps,
                          std::uint64_t c = 1);
  // Merges duplicate exponent vectors, reduces mod p and drops zeros.
  static ModPoly from_terms(PrimeModulus p, VarList vars, std::vector<Term> terms);
  // Takes exponents already sorted strictly ascending and coefficients in [1, p).
  static ModPoly from_sorted(PrimeModulus p, VarList vars, std::vector<Exponent> exps,
                             std::vector<std::uint32_t> coeffs);

  PrimeModulus modulus() const noexcept { return p_; }
  const VarList& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  std::span<const Exponent> exponents(std::size_t term) const {
    return {exps_.data() + term * nvars(), nvars()};
  }
  std::uint32_t coeff(std::size_t term) const { return coeffs_[term]; }
  std::span<const std::uint32_t> coeffs() const noexcept { return coeffs_; }
  std::span<const Exponent> all_exponents() const noexcept { return exps_; }

  // Largest / smallest exponent of variable v over all terms (0 for the zero polynomial).
  Exponent degree(std::size_t v) const;
  Exponent min_degree(std::size_t v) const;
  bool has_negative_exponent() const;

  friend bool operator==(const ModPoly& a, const ModPoly& b);
  // Orders by (p, term exponents, coefficients); variable lists are assumed equal.
  friend std::strong_ordering operator<=>(const ModPoly& a, const ModPoly& b);

 private:
  PrimeModulus p_;
  VarList vars_;
  std::vector<Exponent> exps_;
  std::vector<std::uint32_t> coeffs_;
};

// Divides out the greatest common monomial so every variable has minimum
// exponent 0. Throws InputError on the zero polynomial.
ModPoly canonicalize(const ModPoly& a);
bool is_canonical(const ModPoly& a);

ModPoly add_mod(const ModPoly& a, const ModPoly& b);
ModPoly negate(const ModPoly& a);
ModPoly mul_mod(const ModPoly& a, const ModPoly& b);
ModPoly pow_mod(const ModPoly& a, std::uint64_t e);

// Sum of the reduced coefficients with all variables set to 1.
std::uint64_t functional_scalar(const ModPoly& a);
Histogram functional_histogram(const ModPoly& a);

// Splits a by exponent residues: a = sum_alpha x^alpha * R_alpha(x^p).
// Keys are residue vectors in lexicographic order; zero classes are absent.
// Throws InputError if a has a negative exponent.
std::map<ExponentVector, ModPoly> frobenius_decompose(const ModPoly& a);

// Terms joined by '+', e.g. "1+x+2*x^2*y". The zero polynomial prints as "0".
std::string to_string(const ModPoly& a);

namespace detail {
// The two multiplication strategies behind mul_mod, exposed for equivalence tests.
ModPoly mul_mod_dense(const ModPoly& a, const ModPoly& b);
ModPoly mul_mod_sparse(const ModPoly& a, const ModPoly& b);
}  // namespace detail

}  // namespace cacount
