#include "cacount/oracle.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "cacount/errors.hpp"

namespace cacount {

namespace {

struct Grid {
  std::vector<std::int64_t> stride;  // first variable most significant
  std::size_t cells = 0;
};

// Calls fn(flat) for every cell of the region [0, ext_0) x ... x [0, ext_{k-1}).
template <typename Fn>
void for_each_cell(const std::vector<std::int64_t>& ext, const Grid& grid, Fn&& fn) {
  const std::size_t k = ext.size();
  for (auto e : ext) {
    if (e <= 0) return;
  }
  std::vector<std::int64_t> idx(k, 0);
  std::int64_t flat = 0;
  for (;;) {
    fn(static_cast<std::size_t>(flat));
    std::size_t v = k;
    while (v > 0) {
      --v;
      if (++idx[v] < ext[v]) {
        flat += grid.stride[v];
        break;
      }
      flat -= (ext[v] - 1) * grid.stride[v];
      idx[v] = 0;
      if (v == 0) return;
    }
    if (k == 0) return;
  }
}

struct ShiftedTerms {
  std::vector<std::vector<std::int64_t>> exps;  // minimum exponent per variable is 0
  std::vector<std::uint32_t> coeffs;
  std::vector<std::int64_t> span;               // max exponent per variable after the shift
};

ShiftedTerms shifted(const ModPoly& a) {
  const std::size_t k = a.nvars();
  ShiftedTerms t;
  t.span.assign(k, 0);
  std::vector<std::int64_t> lo(k, 0);
  for (std::size_t v = 0; v < k; ++v) {
    for (std::size_t i = 0; i < a.size(); ++i) lo[v] = i == 0 ? a.exponents(i)[v] : std::min<std::int64_t>(lo[v], a.exponents(i)[v]);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<std::int64_t> e(k);
    for (std::size_t v = 0; v < k; ++v) {
      e[v] = std::int64_t{a.exponents(i)[v]} - lo[v];
      t.span[v] = std::max(t.span[v], e[v]);
    }
    t.exps.push_back(std::move(e));
    t.coeffs.push_back(a.coeff(i));
  }
  return t;
}

}  // namespace

std::vector<OracleSample> brute_sequence(const ModPoly& P, const ModPoly& q0, std::uint64_t count,
                                         OracleOptions options) {
  if (P.modulus() != q0.modulus() || !(P.vars() == q0.vars())) throw InputError("oracle inputs are incompatible");
  std::vector<OracleSample> out;
  if (count == 0) return out;
  const std::uint32_t p = P.modulus();
  const std::size_t k = P.nvars();
  const std::size_t width = p - 1;
  if (P.is_zero() || q0.is_zero()) {
    out.assign(count, OracleSample{0, 0, Histogram{std::vector<std::uint64_t>(width, 0)}});
    return out;
  }

  const ShiftedTerms pt = shifted(P);
  const ShiftedTerms qt = shifted(q0);
  Grid grid;
  grid.stride.assign(k, 0);
  std::uint64_t cells = 1;
  for (std::size_t v = k; v-- > 0;) {
    grid.stride[v] = static_cast<std::int64_t>(cells);
    const long double extent = static_cast<long double>(qt.span[v]) +
                               static_cast<long double>(count - 1) * static_cast<long double>(pt.span[v]) + 1;
    if (extent * static_cast<long double>(cells) > static_cast<long double>(options.term_budget)) {
      throw ResourceLimit("oracle expansion needs more than " + std::to_string(options.term_budget) + " cells");
    }
    cells *= static_cast<std::uint64_t>(extent);
  }
  grid.cells = static_cast<std::size_t>(cells);

  std::vector<std::int64_t> p_offsets;
  for (const auto& e : pt.exps) {
    std::int64_t off = 0;
    for (std::size_t v = 0; v < k; ++v) off += e[v] * grid.stride[v];
    p_offsets.push_back(off);
  }

  std::vector<std::uint32_t> cur(grid.cells, 0), next(grid.cells, 0);
  std::vector<std::int64_t> ext(k);
  for (std::size_t v = 0; v < k; ++v) ext[v] = qt.span[v] + 1;
  for (std::size_t i = 0; i < qt.exps.size(); ++i) {
    std::int64_t off = 0;
    for (std::size_t v = 0; v < k; ++v) off += qt.exps[i][v] * grid.stride[v];
    cur[static_cast<std::size_t>(off)] = qt.coeffs[i];
  }

  for (std::uint64_t n = 0; n < count; ++n) {
    OracleSample sample{0, 0, Histogram{std::vector<std::uint64_t>(width, 0)}};
    for_each_cell(ext, grid, [&](std::size_t c) {
      if (const std::uint32_t v = cur[c]; v != 0) {
        sample.scalar += v;
        ++sample.nonzero;
        ++sample.histogram.counts[v - 1];
      }
    });
    out.push_back(std::move(sample));
    if (n + 1 == count) break;

    std::vector<std::int64_t> grown(k);
    for (std::size_t v = 0; v < k; ++v) grown[v] = ext[v] + pt.span[v];
    for_each_cell(grown, grid, [&](std::size_t c) { next[c] = 0; });
    for_each_cell(ext, grid, [&](std::size_t c) {
      const std::uint64_t v = cur[c];
      if (v == 0) return;
      for (std::size_t t = 0; t < p_offsets.size(); ++t) {
        std::uint32_t& dst = next[c + static_cast<std::size_t>(p_offsets[t])];
        dst = static_cast<std::uint32_t>((dst + v * pt.coeffs[t]) % p);
      }
    });
    cur.swap(next);
    ext = std::move(grown);
  }
  return out;
}

std::uint64_t brute_scalar(const ModPoly& P, const ModPoly& q0, std::uint64_t n, OracleOptions options) {
  return brute_sequence(P, q0, n + 1, options).back().scalar;
}

Histogram brute_histogram(const ModPoly& P, const ModPoly& q0, std::uint64_t n, OracleOptions options) {
  return brute_sequence(P, q0, n + 1, options).back().histogram;
}

bool VerificationReport::passed() const {
  return std::ranges::all_of(checks, [](const CheckResult& c) { return c.passed || c.informational; });
}

namespace {

std::string histogram_text(const Histogram& h) {
  std::string s = "(";
  for (std::size_t i = 0; i < h.counts.size(); ++i) s += (i ? "," : "") + std::to_string(h.counts[i]);
  return s + ")";
}

std::string histogram_text(const BigHistogram& h) {
  std::string s = "(";
  for (std::size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + h[i].get_str();
  return s + ")";
}

bool same(const Histogram& a, const BigHistogram& b) {
  if (a.counts.size() != b.size()) return false;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (from_u64(a.counts[i]) != b[i]) return false;
  }
  return true;
}

CheckResult check_oracle_agreement(const Scheme& s, std::uint64_t nmax, const std::vector<OracleSample>& truth) {
  CheckResult r{"oracle_agreement", true, false, "a_1(n) and its histogram match brute force for n < " + std::to_string(nmax), {}};
  const auto values = terms_prefix(s, nmax);
  for (std::uint64_t n = 0; n < nmax; ++n) {
    const BigNat expected = from_u64(truth[n].scalar);
    if (values[n] != expected) {
      r.passed = false;
      r.detail = "scalar mismatch at n=" + std::to_string(n);
      r.counterexample = Counterexample{from_u64(n), expected, values[n]};
      return r;
    }
    const BigHistogram h = eval_histogram_at(s, from_u64(n));
    if (!same(truth[n].histogram, h)) {
      r.passed = false;
      r.detail = "histogram mismatch at n=" + std::to_string(n) + ": expected " + histogram_text(truth[n].histogram) +
                 ", got " + histogram_text(h);
      r.counterexample = Counterexample{from_u64(n), expected, values[n]};
      return r;
    }
  }
  return r;
}

CheckResult check_recurrence(const Scheme& s, std::uint64_t nmax, const std::vector<std::vector<OracleSample>>& seqs) {
  CheckResult r{"recurrence_identity", true, false,
                "a_j(p*n+i) = sum over S_i(j) of a_l(n) against brute force for p*n+i < " + std::to_string(nmax), {}};
  const std::uint32_t p = s.digits();
  const std::size_t width = p - 1;
  for (std::uint64_t idx = 0; idx < nmax; ++idx) {
    const std::uint64_t n = idx / p;
    const auto digit = static_cast<std::uint32_t>(idx % p);
    for (std::size_t j = 0; j < s.size(); ++j) {
      std::uint64_t sum = 0;
      Histogram hsum{std::vector<std::uint64_t>(width, 0)};
      for (StateIndex l : s.transitions[j][digit]) {
        sum += seqs[l][n].scalar;
        for (std::size_t c = 0; c < width; ++c) hsum.counts[c] += seqs[l][n].histogram.counts[c];
      }
      const OracleSample& lhs = seqs[j][idx];
      if (lhs.scalar != sum || !(lhs.histogram == hsum)) {
        r.passed = false;
        r.detail = "state " + std::to_string(j + 1) + ", digit " + std::to_string(digit) + ", n=" + std::to_string(n) +
                   ": a_" + std::to_string(j + 1) + "(" + std::to_string(idx) + ") expected " +
                   std::to_string(lhs.scalar) + " " + histogram_text(lhs.histogram) + ", got " + std::to_string(sum) +
                   " " + histogram_text(hsum);
        r.counterexample = Counterexample{from_u64(idx), from_u64(lhs.scalar), from_u64(sum)};
        return r;
      }
    }
  }
  return r;
}

CheckResult check_fixed_point(const Scheme& s) {
  CheckResult r{"fixed_point", true, false, "a(0) = M_0 a(0) for scalars and histograms", {}};
  const std::size_t width = s.digits() - 1;
  for (std::size_t j = 0; j < s.size(); ++j) {
    std::uint64_t sum = 0;
    Histogram hsum{std::vector<std::uint64_t>(width, 0)};
    for (StateIndex l : s.transitions[j][0]) {
      sum += s.base_scalar[l];
      for (std::size_t c = 0; c < width; ++c) hsum.counts[c] += s.base_histogram[l].counts[c];
    }
    if (sum != s.base_scalar[j] || !(hsum == s.base_histogram[j])) {
      r.passed = false;
      r.detail = "row " + std::to_string(j + 1) + " of M_0 a(0) differs from a(0)";
      r.counterexample = Counterexample{0, from_u64(s.base_scalar[j]), from_u64(sum)};
      return r;
    }
  }
  return r;
}

CheckResult check_sparse(const Scheme& s, std::uint64_t nmax, const std::vector<OracleSample>& truth) {
  const std::uint32_t p = s.digits();
  std::size_t max_k = 0;
  for (std::uint64_t q = p; q - 1 < nmax; q *= p) ++max_k;
  CheckResult r{"sparse_agreement", true, false,
                "c(k) = a_1(p^k - 1) for k <= " + std::to_string(max_k) + " against eval_at and brute force", {}};
  const auto c = sparse_terms(s, max_k);
  std::uint64_t q = 1;
  for (std::size_t k = 0; k <= max_k; ++k, q *= p) {
    const BigNat idx = from_u64(q - 1);
    const BigNat expected = from_u64(truth[q - 1].scalar);
    if (c[k] != expected || eval_at(s, idx) != expected) {
      r.passed = false;
      r.detail = "mismatch at k=" + std::to_string(k);
      r.counterexample = Counterexample{idx, expected, c[k]};
      return r;
    }
  }
  return r;
}

CheckResult check_gf(const Scheme& s, const RationalGF& gf) {
  const std::size_t count = 2 * sparse_closure(s).size() + 4;
  CheckResult r{"gf_series", true, false,
                to_string(gf) + " matches the first " + std::to_string(count) + " sparse terms", {}};
  const auto v = gf_verify(gf, s, count);
  if (!v.passed) {
    r.passed = false;
    r.detail = "series of " + to_string(gf) + " disagrees at k=" + std::to_string(*v.first_mismatch);
    r.counterexample = Counterexample{from_u64(*v.first_mismatch), v.expected, v.got};
  }
  return r;
}

CheckResult check_rlt(const Scheme& s, std::uint64_t nmax) {
  CheckResult r{"run_length_transform", true, true,
                "a_1(n) = product of c(L) over runs of 1-bits, for n < " + std::to_string(nmax), {}};
  const auto rep = rlt_check(s, nmax);
  if (!rep.passed) {
    r.passed = false;
    r.detail = "run-length transform does not hold (informational)";
    r.counterexample = rep.counterexample;
  }
  return r;
}

}  // namespace

VerificationReport verify_scheme(const Scheme& s, std::uint64_t nmax, const std::optional<RationalGF>& gf,
                                 OracleOptions options) {
  VerificationReport report;
  report.scheme_id = "p=" + std::to_string(s.digits()) + " P=" + to_string(s.polynomial) + " q0=" + to_string(s.q0) +
                     " states=" + std::to_string(s.size());
  if (nmax == 0) nmax = 1;

  std::vector<std::vector<OracleSample>> seqs;
  seqs.reserve(s.size());
  for (const ModPoly& q : s.states) seqs.push_back(brute_sequence(s.polynomial, q, nmax, options));

  report.checks.push_back(check_oracle_agreement(s, nmax, seqs[0]));
  report.checks.push_back(check_recurrence(s, nmax, seqs));
  report.checks.push_back(check_fixed_point(s));
  report.checks.push_back(check_sparse(s, nmax, seqs[0]));
  if (gf) report.checks.push_back(check_gf(s, *gf));
  if (s.digits() == 2) report.checks.push_back(check_rlt(s, nmax));
  return report;
}

std::string render_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "scheme: " << r.scheme_id << "\n";
  for (const auto& c : r.checks) {
    out << (c.passed ? "[PASS] " : (c.informational ? "[INFO] " : "[FAIL] ")) << c.name << ": " << c.detail;
    if (c.counterexample) {
      out << " (n=" << c.counterexample->n.get_str() << ", expected " << c.counterexample->expected.get_str()
          << ", got " << c.counterexample->got.get_str() << ")";
    }
    out << "\n";
  }
  out << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_json(const VerificationReport& r) {
  nlohmann::ordered_json out;
  out["scheme"] = r.scheme_id;
  out["passed"] = r.passed();
  out["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["informational"] = c.informational;
    j["detail"] = c.detail;
    if (c.counterexample) {
      j["counterexample"] = {{"n", c.counterexample->n.get_str()},
                             {"expected", c.counterexample->expected.get_str()},
                             {"got", c.counterexample->got.get_str()}};
    } else {
      j["counterexample"] = nullptr;
    }
    out["checks"].push_back(std::move(j));
  }
  return out.dump();
}

}  // namespace cacount
