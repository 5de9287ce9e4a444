#include "cacount/cli.hpp"

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cacount/errors.hpp"
#include "cacount/evalseq.hpp"
#include "cacount/genfun.hpp"
#include "cacount/oracle.hpp"
#include "cacount/parse.hpp"
#include "cacount/scheme_io.hpp"

namespace cacount::cli {

namespace {

using ojson = nlohmann::ordered_json;

nlohmann::ordered_json decimal_array(const std::vector<BigNat>& values) {
  ojson arr = ojson::array();
  for (const auto& v : values) arr.push_back(v.get_str());
  return arr;
}

std::string histogram_line(const BigNat& n, const BigHistogram& h) {
  std::string line = n.get_str() + " ";
  for (std::size_t i = 0; i < h.size(); ++i) line += (i ? "," : "") + h[i].get_str();
  return line;
}

struct Options {
  bool json = false;
  // synth
  std::uint32_t p = 0;
  std::string vars;
  std::string poly;
  std::string q0 = "1";
  std::string output;
  std::size_t max_states = SynthesisOptions{}.max_states;
  // scheme consumers
  std::string scheme;
  std::optional<std::string> n;
  std::optional<std::uint64_t> pow;
  std::optional<std::uint64_t> npow10;
  bool histogram = false;
  std::size_t count = 0;
  std::size_t max_k = 0;
  bool guess = false;
  std::optional<std::size_t> terms;
  std::size_t threshold = GenfunOptions{}.solve_threshold;
  std::uint64_t nmax = 256;
  std::uint64_t budget = OracleOptions{}.term_budget;
};

int do_synth(const Options& o, std::ostream& out) {
  const PrimeModulus p(o.p);
  const VarList vars = parse_var_list(o.vars);
  const ModPoly P = parse_poly(o.poly, vars, p);
  const ModPoly Q0 = parse_poly(o.q0, vars, p);
  const Scheme s = synthesize(P, Q0, SynthesisOptions{o.max_states});
  if (o.output.empty()) {
    out << scheme_to_json(s);
    return kSuccess;
  }
  save_scheme(s, o.output);
  if (o.json) {
    out << ojson{{"output", o.output}, {"states", s.size()}}.dump() << "\n";
  } else {
    out << "wrote " << s.size() << " states to " << o.output << "\n";
  }
  return kSuccess;
}

BigNat requested_index(const Options& o, const Scheme& s) {
  const int given = int(o.n.has_value()) + int(o.pow.has_value()) + int(o.npow10.has_value());
  if (given != 1) throw InputError("exactly one of --n, --pow, --npow10 is required");
  BigNat n;
  if (o.n) {
    n = parse_bignat(*o.n);
  } else if (o.pow) {
    mpz_ui_pow_ui(n.get_mpz_t(), s.digits(), *o.pow);
    n -= 1;
  } else {
    mpz_ui_pow_ui(n.get_mpz_t(), 10, *o.npow10);
  }
  return n;
}

int do_eval(const Options& o, std::ostream& out) {
  const Scheme s = load_scheme(o.scheme);
  const BigNat n = requested_index(o, s);
  if (o.histogram) {
    const BigHistogram h = eval_histogram_at(s, n);
    if (o.json) {
      out << ojson{{"n", n.get_str()}, {"histogram", decimal_array(h)}}.dump() << "\n";
    } else {
      out << histogram_line(n, h) << "\n";
    }
  } else {
    const BigNat v = eval_at(s, n);
    if (o.json) {
      out << ojson{{"n", n.get_str()}, {"value", v.get_str()}}.dump() << "\n";
    } else {
      out << v.get_str() << "\n";
    }
  }
  return kSuccess;
}

int do_terms(const Options& o, std::ostream& out) {
  const Scheme s = load_scheme(o.scheme);
  if (o.histogram) {
    const auto hs = histogram_prefix(s, o.count);
    if (o.json) {
      ojson arr = ojson::array();
      for (const auto& h : hs) arr.push_back(decimal_array(h));
      out << ojson{{"histograms", arr}}.dump() << "\n";
    } else {
      for (std::size_t n = 0; n < hs.size(); ++n) out << histogram_line(from_u64(n), hs[n]) << "\n";
    }
    return kSuccess;
  }
  const auto values = terms_prefix(s, o.count);
  if (o.json) {
    out << ojson{{"terms", decimal_array(values)}}.dump() << "\n";
  } else {
    for (const auto& v : values) out << v.get_str() << "\n";
  }
  return kSuccess;
}

int do_sparse(const Options& o, std::ostream& out) {
  const Scheme s = load_scheme(o.scheme);
  const auto values = sparse_terms(s, o.max_k);
  if (o.json) {
    out << ojson{{"sparse", decimal_array(values)}}.dump() << "\n";
  } else {
    for (const auto& v : values) out << v.get_str() << "\n";
  }
  return kSuccess;
}

int do_gf(const Options& o, std::ostream& out, std::ostream& err) {
  const Scheme s = load_scheme(o.scheme);
  RationalGF g;
  if (o.guess) {
    const std::size_t terms = o.terms.value_or(rigorous_term_count(s));
    g = gf_guess(s, terms);
    if (!g.rigorous) {
      err << "note: " << terms << " terms are fewer than the " << rigorous_term_count(s)
          << " needed to certify the guess\n";
    }
  } else {
    g = gf_prove(s, 0, GenfunOptions{o.threshold});
  }
  out << (o.json ? to_json(g) : to_string(g)) << "\n";
  return kSuccess;
}

int do_check(const Options& o, std::ostream& out) {
  const Scheme s = load_scheme(o.scheme);
  std::optional<RationalGF> gf;
  if (sparse_closure(s).size() <= o.threshold) gf = gf_prove(s, 0, GenfunOptions{o.threshold});
  const VerificationReport report = verify_scheme(s, o.nmax, gf, OracleOptions{o.budget});
  out << (o.json ? render_json(report) + "\n" : render_text(report));
  return report.passed() ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Base-p recurrence schemes for counting coefficients of Q*P^n mod p", "cacount"};
  app.require_subcommand(1);
  Options o;

  auto json_flag = [&](CLI::App* cmd) { cmd->add_flag("--json", o.json, "Machine-readable output"); };
  auto scheme_opt = [&](CLI::App* cmd) {
    cmd->add_option("--scheme", o.scheme, "Scheme JSON file")->required()->check(CLI::ExistingFile);
  };

  auto* synth = app.add_subcommand("synth", "Synthesize the recurrence scheme for P (and Q0)");
  synth->add_option("-p,--prime", o.p, "Prime modulus")->required();
  synth->add_option("--vars", o.vars, "Comma-separated variable names")->required();
  synth->add_option("--poly", o.poly, "Polynomial P")->required();
  synth->add_option("--q0", o.q0, "Seed polynomial Q0")->capture_default_str();
  synth->add_option("-o,--output", o.output, "Output scheme file (default: stdout)");
  synth->add_option("--max-states", o.max_states, "State count guard")->capture_default_str();
  json_flag(synth);

  auto* eval = app.add_subcommand("eval", "Evaluate a_1(n)");
  scheme_opt(eval);
  eval->add_option("--n", o.n, "Index n as a decimal string");
  eval->add_option("--pow", o.pow, "Use n = p^K - 1");
  eval->add_option("--npow10", o.npow10, "Use n = 10^K");
  eval->add_flag("--histogram", o.histogram, "Print per-residue counts instead");
  json_flag(eval);

  auto* terms = app.add_subcommand("terms", "Print a_1(0), ..., a_1(N-1)");
  scheme_opt(terms);
  terms->add_option("-N,--count", o.count, "Number of terms")->required();
  terms->add_flag("--histogram", o.histogram, "Print per-residue counts instead");
  json_flag(terms);

  auto* sparse = app.add_subcommand("sparse", "Print a_1(p^k - 1) for k = 0..K");
  scheme_opt(sparse);
  sparse->add_option("-K", o.max_k, "Largest k")->required();
  json_flag(sparse);

  auto* gf = app.add_subcommand("gf", "Generating function of the sparse subsequence");
  scheme_opt(gf);
  gf->add_flag("--guess", o.guess, "Fit from terms instead of solving the linear system");
  gf->add_option("--terms", o.terms, "Term budget for --guess (default: the rigorous minimum)");
  gf->add_option("--threshold", o.threshold, "Largest system solved exactly")->capture_default_str();
  json_flag(gf);

  auto* check = app.add_subcommand("check", "Verify a scheme against brute force");
  scheme_opt(check);
  check->add_option("--nmax", o.nmax, "Check indices below this bound")->capture_default_str();
  check->add_option("--budget", o.budget, "Oracle grid cell budget")->capture_default_str();
  check->add_option("--threshold", o.threshold, "Largest system solved exactly for the GF check")
      ->capture_default_str();
  json_flag(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidInput;
  }

  try {
    if (synth->parsed()) return do_synth(o, out);
    if (eval->parsed()) return do_eval(o, out);
    if (terms->parsed()) return do_terms(o, out);
    if (sparse->parsed()) return do_sparse(o, out);
    if (gf->parsed()) return do_gf(o, out, err);
    return do_check(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const std::overflow_error& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

}  // namespace cacount::cli
