#pragma once

// Dense univariate polynomials over Z, ascending coefficients, no trailing zeros.

#include <string>
#include <string_view>
#include <vector>

#include "cacount/bignat.hpp"

namespace cacount {

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  static IntPoly constant(const BigInt& c);
  static IntPoly from_ints(std::initializer_list<long> coeffs);

  bool is_zero() const noexcept { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const BigInt& leading() const { return c_.back(); }

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& k);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& k) { return a *= k; }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> c_;
};

// Quotient of an exact division in Z[t]; throws std::domain_error when b does
// not divide a with integer quotient.
IntPoly divexact(const IntPoly& a, const IntPoly& b);

// Remainder of a divided by b over Q[t], scaled to an integer primitive
// polynomial (so only its vanishing is meaningful).
IntPoly rem_primitive(const IntPoly& a, const IntPoly& b);

BigInt content(const IntPoly& a);
IntPoly primitive_part(const IntPoly& a);  // positive leading coefficient

// Greatest common divisor over Q[t], returned primitive with positive leading
// coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Ascending powers, e.g. "1-t-2*t^2"; zero prints as "0".
std::string to_string(const IntPoly& a, std::string_view var = "t");

// Determinant of a square matrix over Z[t] by fraction-free (Bareiss) elimination.
IntPoly determinant(std::vector<std::vector<IntPoly>> m);

}  // namespace cacount
