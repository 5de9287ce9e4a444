#include "cacount/parse.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

#include "cacount/errors.hpp"

namespace cacount {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  Parser(std::string_view text, const VarList& vars, PrimeModulus p) : text_(text), vars_(vars), p_(p) {}

  ModPoly parse() {
    ModPoly result = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ModPoly expr() {
    ModPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc = add_mod(acc, term());
      } else if (accept('-')) {
        acc = add_mod(acc, negate(term()));
      } else {
        return acc;
      }
    }
  }

  ModPoly term() {
    ModPoly acc = factor();
    while (accept('*')) acc = mul_mod(acc, factor());
    return acc;
  }

  ModPoly factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ModPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (is_digit(c)) {
      std::uint64_t residue = 0;
      while (pos_ < text_.size() && is_digit(text_[pos_])) {
        residue = (residue * 10 + static_cast<std::uint64_t>(text_[pos_] - '0')) % p_;
        ++pos_;
      }
      if (pos_ < text_.size() && is_ident_start(text_[pos_])) {
        fail("implicit multiplication is not allowed; write '*'");
      }
      return ModPoly::constant(p_, vars_, residue);
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      std::size_t index = vars_.size();
      for (std::size_t v = 0; v < vars_.size(); ++v) {
        if (vars_[v] == name) index = v;
      }
      if (index == vars_.size()) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      Exponent e = 1;
      if (accept('^')) e = signed_integer();
      ExponentVector exps(vars_.size(), 0);
      exps[index] = e;
      return ModPoly::monomial(p_, vars_, exps, 1);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Exponent signed_integer() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
      skip_ws();
    }
    if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail("expected exponent");
    std::int64_t value = 0;
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<Exponent>::max()) fail("exponent out of range");
      ++pos_;
    }
    return static_cast<Exponent>(negative ? -value : value);
  }

  std::string_view text_;
  const VarList& vars_;
  PrimeModulus p_;
  std::size_t pos_ = 0;
};

}  // namespace

ModPoly parse_poly(std::string_view text, const VarList& vars, PrimeModulus p) {
  return Parser(text, vars, p).parse();
}

VarList parse_var_list(std::string_view text) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (item.empty() || !is_ident_start(item.front()) ||
        !std::all_of(item.begin(), item.end(), is_ident_char)) {
      throw InputError("invalid variable name '" + std::string(item) + "'");
    }
    if (!seen.insert(std::string(item)).second) throw InputError("duplicate variable '" + std::string(item) + "'");
    names.emplace_back(item);
    pos = comma + 1;
  }
  return VarList(std::move(names));
}

}  // namespace cacount
