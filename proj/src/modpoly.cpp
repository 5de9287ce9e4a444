#include "cacount/modpoly.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "cacount/errors.hpp"
#include "cacount/simd.hpp"

namespace cacount {

namespace {

// Dense products are used while the result box stays below this many cells.
constexpr std::uint64_t kDenseCellLimit = std::uint64_t{1} << 25;

void require_compatible(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) throw InputError("polynomials have different moduli");
  if (!(a.vars() == b.vars())) throw InputError("polynomials have different variable lists");
}

Exponent checked_exponent(std::int64_t e) {
  if (e < std::numeric_limits<Exponent>::min() || e > std::numeric_limits<Exponent>::max()) {
    throw std::overflow_error("exponent overflow");
  }
  return static_cast<Exponent>(e);
}

// Sorts flat (exponent row, coefficient) pairs, merges duplicates and drops
// zero residues.
ModPoly build_unsorted(PrimeModulus p, VarList vars, const std::vector<Exponent>& exps,
                       const std::vector<std::uint64_t>& coeffs) {
  const std::size_t k = vars.size();
  const std::size_t n = coeffs.size();
  auto row = [&](std::size_t i) { return std::span<const Exponent>(exps.data() + i * k, k); };

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    auto rx = row(x), ry = row(y);
    return std::lexicographical_compare(rx.begin(), rx.end(), ry.begin(), ry.end());
  });

  std::vector<Exponent> out_exps;
  std::vector<std::uint32_t> out_coeffs;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    std::uint64_t acc = 0;
    while (j < n && std::ranges::equal(row(order[i]), row(order[j]))) {
      acc = (acc + coeffs[order[j]] % p) % p;
      ++j;
    }
    if (acc != 0) {
      auto r = row(order[i]);
      out_exps.insert(out_exps.end(), r.begin(), r.end());
      out_coeffs.push_back(static_cast<std::uint32_t>(acc));
    }
    i = j;
  }
  return ModPoly::from_sorted(p, std::move(vars), std::move(out_exps), std::move(out_coeffs));
}

}  // namespace

VarList::VarList(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

ModPoly::ModPoly(PrimeModulus p, VarList vars) : p_(p), vars_(std::move(vars)) {}

ModPoly ModPoly::constant(PrimeModulus p, VarList vars, std::uint64_t c) {
  const std::size_t k = vars.size();
  ModPoly out(p, std::move(vars));
  if (c % p != 0) {
    out.exps_.assign(k, 0);
    out.coeffs_.push_back(static_cast<std::uint32_t>(c % p));
  }
  return out;
}

ModPoly ModPoly::monomial(PrimeModulus p, VarList vars, std::span<const Exponent> exps,
                          std::uint64_t c) {
  if (exps.size() != vars.size()) throw InputError("exponent vector length does not match variable count");
  ModPoly out(p, std::move(vars));
  if (c % p != 0) {
    out.exps_.assign(exps.begin(), exps.end());
    out.coeffs_.push_back(static_cast<std::uint32_t>(c % p));
  }
  return out;
}

ModPoly ModPoly::from_terms(PrimeModulus p, VarList vars, std::vector<Term> terms) {
  std::vector<Exponent> exps;
  std::vector<std::uint64_t> coeffs;
  exps.reserve(terms.size() * vars.size());
  coeffs.reserve(terms.size());
  for (const Term& t : terms) {
    if (t.exps.size() != vars.size()) throw InputError("exponent vector length does not match variable count");
    exps.insert(exps.end(), t.exps.begin(), t.exps.end());
    coeffs.push_back(t.coeff);
  }
  return build_unsorted(p, std::move(vars), exps, coeffs);
}

ModPoly ModPoly::from_sorted(PrimeModulus p, VarList vars, std::vector<Exponent> exps,
                             std::vector<std::uint32_t> coeffs) {
  assert(exps.size() == coeffs.size() * vars.size());
  ModPoly out(p, std::move(vars));
  out.exps_ = std::move(exps);
  out.coeffs_ = std::move(coeffs);
  return out;
}

Exponent ModPoly::degree(std::size_t v) const {
  if (is_zero()) return 0;
  Exponent d = std::numeric_limits<Exponent>::min();
  for (std::size_t i = 0; i < size(); ++i) d = std::max(d, exps_[i * nvars() + v]);
  return d;
}

Exponent ModPoly::min_degree(std::size_t v) const {
  if (is_zero()) return 0;
  Exponent d = std::numeric_limits<Exponent>::max();
  for (std::size_t i = 0; i < size(); ++i) d = std::min(d, exps_[i * nvars() + v]);
  return d;
}

bool ModPoly::has_negative_exponent() const {
  return std::ranges::any_of(exps_, [](Exponent e) { return e < 0; });
}

bool operator==(const ModPoly& a, const ModPoly& b) {
  return a.p_ == b.p_ && a.vars_ == b.vars_ && a.exps_ == b.exps_ && a.coeffs_ == b.coeffs_;
}

std::strong_ordering operator<=>(const ModPoly& a, const ModPoly& b) {
  if (auto c = a.p_ <=> b.p_; c != 0) return c;
  if (auto c = a.exps_ <=> b.exps_; c != 0) return c;
  return a.coeffs_ <=> b.coeffs_;
}

ModPoly canonicalize(const ModPoly& a) {
  if (a.is_zero()) throw InputError("the zero polynomial has no canonical form");
  const std::size_t k = a.nvars();
  std::vector<Exponent> shift(k);
  for (std::size_t v = 0; v < k; ++v) shift[v] = a.min_degree(v);
  std::vector<Exponent> exps(a.all_exponents().begin(), a.all_exponents().end());
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] -= shift[i % k];
  // A per-coordinate shift preserves lexicographic order.
  return ModPoly::from_sorted(a.modulus(), a.vars(), std::move(exps),
                              {a.coeffs().begin(), a.coeffs().end()});
}

bool is_canonical(const ModPoly& a) {
  if (a.is_zero()) return false;
  for (std::size_t v = 0; v < a.nvars(); ++v) {
    if (a.min_degree(v) != 0) return false;
  }
  return true;
}

ModPoly add_mod(const ModPoly& a, const ModPoly& b) {
  require_compatible(a, b);
  const std::uint32_t p = a.modulus();
  std::vector<Exponent> exps;
  std::vector<std::uint32_t> coeffs;
  std::size_t i = 0, j = 0;
  auto emit = [&](std::span<const Exponent> e, std::uint32_t c) {
    if (c == 0) return;
    exps.insert(exps.end(), e.begin(), e.end());
    coeffs.push_back(c);
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      emit(a.exponents(i), a.coeff(i));
      ++i;
    } else if (i == a.size()) {
      emit(b.exponents(j), b.coeff(j));
      ++j;
    } else {
      auto ea = a.exponents(i), eb = b.exponents(j);
      auto cmp = std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
      if (cmp < 0) {
        emit(ea, a.coeff(i++));
      } else if (cmp > 0) {
        emit(eb, b.coeff(j++));
      } else {
        emit(ea, static_cast<std::uint32_t>((std::uint64_t{a.coeff(i)} + b.coeff(j)) % p));
        ++i;
        ++j;
      }
    }
  }
  return ModPoly::from_sorted(a.modulus(), a.vars(), std::move(exps), std::move(coeffs));
}

ModPoly negate(const ModPoly& a) {
  const std::uint32_t p = a.modulus();
  std::vector<std::uint32_t> coeffs(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : coeffs) c = p - c;
  return ModPoly::from_sorted(a.modulus(), a.vars(), {a.all_exponents().begin(), a.all_exponents().end()},
                              std::move(coeffs));
}

namespace {

struct Box {
  std::vector<std::int64_t> lo;       // per-variable minimum of the product
  std::vector<std::int64_t> stride;   // first variable most significant
  std::uint64_t cells = 0;            // 0 when the box is too large to address
};

Box product_box(const ModPoly& a, const ModPoly& b) {
  const std::size_t k = a.nvars();
  Box box;
  box.lo.resize(k);
  box.stride.resize(k);
  std::vector<std::int64_t> extent(k);
  for (std::size_t v = 0; v < k; ++v) {
    const std::int64_t lo = std::int64_t{a.min_degree(v)} + b.min_degree(v);
    const std::int64_t hi = std::int64_t{a.degree(v)} + b.degree(v);
    checked_exponent(lo);
    checked_exponent(hi);
    box.lo[v] = lo;
    extent[v] = hi - lo + 1;
  }
  std::uint64_t cells = 1;
  for (std::size_t v = k; v-- > 0;) {
    box.stride[v] = static_cast<std::int64_t>(cells);
    if (static_cast<std::uint64_t>(extent[v]) > kDenseCellLimit / cells) return box;
    cells *= static_cast<std::uint64_t>(extent[v]);
  }
  box.cells = cells;
  return box;
}

// Offset of exps - base within the box.
std::int64_t flat_offset(std::span<const Exponent> exps, std::span<const Exponent> base, const Box& box) {
  std::int64_t off = 0;
  for (std::size_t v = 0; v < exps.size(); ++v) off += (std::int64_t{exps[v]} - base[v]) * box.stride[v];
  return off;
}

std::vector<Exponent> min_corner(const ModPoly& a) {
  std::vector<Exponent> m(a.nvars());
  for (std::size_t v = 0; v < a.nvars(); ++v) m[v] = a.min_degree(v);
  return m;
}

// Kronecker-style layout: both factors are laid out with the strides of the
// product box, so a row-shifted multiply-accumulate per term of the sparser
// factor computes the whole convolution without wraparound.
std::uint64_t dense_cost(const ModPoly& sparse_side, const ModPoly& dense_side, const Box& box) {
  const auto base = min_corner(dense_side);
  std::vector<Exponent> top(dense_side.nvars());
  for (std::size_t v = 0; v < top.size(); ++v) top[v] = dense_side.degree(v);
  const auto span_len = static_cast<std::uint64_t>(flat_offset(top, base, box)) + 1;
  return sparse_side.size() * span_len + box.cells;
}

ModPoly dense_product(const ModPoly& a, const ModPoly& b, const Box& box) {
  const std::size_t k = a.nvars();
  const std::uint32_t p = a.modulus();
  const auto base_a = min_corner(a);
  const auto base_b = min_corner(b);

  std::vector<Exponent> top_b(k);
  for (std::size_t v = 0; v < k; ++v) top_b[v] = b.degree(v);
  std::vector<std::uint32_t> row(static_cast<std::size_t>(flat_offset(top_b, base_b, box)) + 1, 0);
  for (std::size_t j = 0; j < b.size(); ++j) row[static_cast<std::size_t>(flat_offset(b.exponents(j), base_b, box))] = b.coeff(j);

  std::vector<std::uint64_t> acc(box.cells, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto off = static_cast<std::size_t>(flat_offset(a.exponents(i), base_a, box));
    simd::madd(std::span<std::uint64_t>(acc).subspan(off, row.size()), row, a.coeff(i));
  }

  std::vector<Exponent> exps;
  std::vector<std::uint32_t> coeffs;
  for (std::size_t idx = 0; idx < acc.size(); ++idx) {
    const auto r = static_cast<std::uint32_t>(acc[idx] % p);
    if (r == 0) continue;
    auto rem = static_cast<std::int64_t>(idx);
    for (std::size_t v = 0; v < k; ++v) {
      exps.push_back(static_cast<Exponent>(box.lo[v] + rem / box.stride[v]));
      rem %= box.stride[v];
    }
    coeffs.push_back(r);
  }
  // Flat index order with the first variable most significant is lexicographic order.
  return ModPoly::from_sorted(a.modulus(), a.vars(), std::move(exps), std::move(coeffs));
}

}  // namespace

namespace detail {

ModPoly mul_mod_dense(const ModPoly& a, const ModPoly& b) {
  require_compatible(a, b);
  if (a.is_zero() || b.is_zero()) return ModPoly(a.modulus(), a.vars());
  const Box box = product_box(a, b);
  if (box.cells == 0) throw ResourceLimit("dense product box too large");
  return a.size() <= b.size() ? dense_product(a, b, box) : dense_product(b, a, box);
}

ModPoly mul_mod_sparse(const ModPoly& a, const ModPoly& b) {
  require_compatible(a, b);
  const std::size_t k = a.nvars();
  std::vector<Exponent> exps;
  std::vector<std::uint64_t> coeffs;
  exps.reserve(a.size() * b.size() * k);
  coeffs.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto ea = a.exponents(i);
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto eb = b.exponents(j);
      for (std::size_t v = 0; v < k; ++v) exps.push_back(checked_exponent(std::int64_t{ea[v]} + eb[v]));
      coeffs.push_back(std::uint64_t{a.coeff(i)} * b.coeff(j));
    }
  }
  return build_unsorted(a.modulus(), a.vars(), exps, coeffs);
}

}  // namespace detail

ModPoly mul_mod(const ModPoly& a, const ModPoly& b) {
  require_compatible(a, b);
  if (a.is_zero() || b.is_zero()) return ModPoly(a.modulus(), a.vars());
  const Box box = product_box(a, b);
  if (box.cells != 0) {
    const std::uint64_t cost = std::min(dense_cost(a, b, box), dense_cost(b, a, box));
    if (cost <= 8 * a.size() * b.size() + 4096) {
      return a.size() <= b.size() ? dense_product(a, b, box) : dense_product(b, a, box);
    }
  }
  return detail::mul_mod_sparse(a, b);
}

ModPoly pow_mod(const ModPoly& a, std::uint64_t e) {
  ModPoly result = ModPoly::constant(a.modulus(), a.vars(), 1);
  ModPoly base = a;
  while (e != 0) {
    if (e & 1) result = mul_mod(result, base);
    e >>= 1;
    if (e != 0) base = mul_mod(base, base);
  }
  return result;
}

std::uint64_t functional_scalar(const ModPoly& a) { return simd::sum(a.coeffs()); }

Histogram functional_histogram(const ModPoly& a) {
  Histogram h{std::vector<std::uint64_t>(a.modulus().value() - 1, 0)};
  for (std::uint32_t c : a.coeffs()) ++h.counts[c - 1];
  return h;
}

std::map<ExponentVector, ModPoly> frobenius_decompose(const ModPoly& a) {
  if (a.has_negative_exponent()) throw InputError("frobenius_decompose requires nonnegative exponents");
  const std::size_t k = a.nvars();
  const Exponent p = static_cast<Exponent>(a.modulus().value());

  struct Bucket {
    std::vector<Exponent> exps;
    std::vector<std::uint32_t> coeffs;
  };
  std::map<ExponentVector, Bucket> buckets;
  ExponentVector residue(k);
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto e = a.exponents(i);
    for (std::size_t v = 0; v < k; ++v) residue[v] = e[v] % p;
    Bucket& b = buckets[residue];
    for (std::size_t v = 0; v < k; ++v) b.exps.push_back(e[v] / p);
    b.coeffs.push_back(a.coeff(i));
  }

  // Within a residue class, e -> e div p is order preserving.
  std::map<ExponentVector, ModPoly> out;
  for (auto& [alpha, b] : buckets) {
    out.emplace(alpha, ModPoly::from_sorted(a.modulus(), a.vars(), std::move(b.exps), std::move(b.coeffs)));
  }
  return out;
}

std::string to_string(const ModPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i != 0) out += '+';
    std::string mono;
    auto e = a.exponents(i);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += a.vars()[v];
      if (e[v] != 1) mono += '^' + std::to_string(e[v]);
    }
    const std::uint32_t c = a.coeff(i);
    if (mono.empty()) {
      out += std::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += std::to_string(c) + '*' + mono;
    }
  }
  return out;
}

}  // namespace cacount
