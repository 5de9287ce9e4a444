#include "cacount/intpoly.hpp"

#include <stdexcept>
#include <utility>

namespace cacount {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<BigInt> c;
  for (long v : coeffs) c.emplace_back(v);
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= k;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(c));
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<BigInt> rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<BigInt> q(rem.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) {
      throw std::domain_error("inexact polynomial division");
    }
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
  }
  for (const auto& r : rem) {
    if (r != 0) throw std::domain_error("inexact polynomial division");
  }
  return IntPoly(std::move(q));
}

BigInt content(const IntPoly& a) {
  BigInt g = 0;
  for (const auto& c : a.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly primitive_part(const IntPoly& a) {
  if (a.is_zero()) return {};
  BigInt g = content(a);
  if (a.leading() < 0) g = -g;
  std::vector<BigInt> c = a.coeffs();
  for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly rem_primitive(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  // Pseudo-division: lc(b)^(deg a - deg b + 1) * a = q*b + r.
  std::vector<BigInt> r = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  const BigInt& lb = b.leading();
  while (!r.empty() && r.size() > db) {
    const BigInt top = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& v : r) v *= lb;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[shift + j].get_mpz_t(), top.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    while (!r.empty() && r.back() == 0) r.pop_back();
    IntPoly tmp(std::move(r));
    r = primitive_part(tmp).coeffs();
  }
  return primitive_part(IntPoly(std::move(r)));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = rem_primitive(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::string to_string(const IntPoly& a, std::string_view var) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const BigInt& c = a.coeffs()[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = abs(c);
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    std::string mono;
    if (i >= 1) mono = std::string(var);
    if (i >= 2) mono += '^' + std::to_string(i);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + '*' + mono;
    }
  }
  return out;
}

IntPoly determinant(std::vector<std::vector<IntPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPoly::constant(1);
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  bool negate = false;
  IntPoly prev = IntPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return {};
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Sylvester's identity makes this division exact.
        m[i][j] = divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  IntPoly det = m[n - 1][n - 1];
  if (negate) det *= BigInt(-1);
  return det;
}

}  // namespace cacount
