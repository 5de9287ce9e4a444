#include "cacount/scheme_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cacount/errors.hpp"
#include "cacount/parse.hpp"

namespace cacount {

using nlohmann::json;

std::string scheme_to_json(const Scheme& s) {
  json states = json::array();
  for (const auto& q : s.states) states.push_back(to_string(q));

  std::ostringstream out;
  out << "{\n";
  out << "  \"p\": " << s.p.value() << ",\n";
  out << "  \"vars\": " << json(s.vars.names()).dump() << ",\n";
  out << "  \"polynomial\": " << json(to_string(s.polynomial)).dump() << ",\n";
  out << "  \"q0\": " << json(to_string(s.q0)).dump() << ",\n";
  out << "  \"states\": [";
  for (std::size_t j = 0; j < s.size(); ++j) {
    out << (j ? ",\n    " : "\n    ") << json(to_string(s.states[j])).dump();
  }
  out << "\n  ],\n";
  out << "  \"transitions\": [";
  for (std::size_t j = 0; j < s.size(); ++j) {
    json row = json::array();
    for (const auto& multiset : s.transitions[j]) {
      json list = json::array();
      for (StateIndex l : multiset) list.push_back(l + 1);
      row.push_back(std::move(list));
    }
    out << (j ? ",\n    " : "\n    ") << row.dump();
  }
  out << "\n  ],\n";
  out << "  \"base_scalar\": " << json(s.base_scalar).dump() << ",\n";
  json hist = json::array();
  for (const auto& h : s.base_histogram) hist.push_back(h.counts);
  out << "  \"base_histogram\": " << hist.dump() << "\n";
  out << "}\n";
  return out.str();
}

namespace {

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("scheme file is missing \"") + key + "\"");
  return *it;
}

template <typename T>
T as(const json& value, const char* what) {
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("scheme file has a malformed \"") + what + "\"");
  }
}

}  // namespace

Scheme scheme_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("scheme file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("scheme file must contain a JSON object");

  const PrimeModulus p(as<std::uint32_t>(field(doc, "p"), "p"));
  const VarList vars(as<std::vector<std::string>>(field(doc, "vars"), "vars"));
  auto poly = [&](const std::string& expr) { return parse_poly(expr, vars, p); };

  Scheme s{p, vars, poly(as<std::string>(field(doc, "polynomial"), "polynomial")),
           poly(as<std::string>(field(doc, "q0"), "q0")), {}, {}, {}, {}};
  for (const auto& q : as<std::vector<std::string>>(field(doc, "states"), "states")) s.states.push_back(poly(q));

  using Rows = std::vector<std::vector<std::vector<std::int64_t>>>;
  for (const auto& row : as<Rows>(field(doc, "transitions"), "transitions")) {
    std::vector<std::vector<StateIndex>> digits;
    for (const auto& multiset : row) {
      std::vector<StateIndex> list;
      for (std::int64_t l : multiset) {
        if (l < 1 || static_cast<std::size_t>(l) > s.states.size()) {
          throw InputError("transition index " + std::to_string(l) + " out of range");
        }
        list.push_back(static_cast<StateIndex>(l - 1));
      }
      digits.push_back(std::move(list));
    }
    s.transitions.push_back(std::move(digits));
  }
  s.base_scalar = as<std::vector<std::uint64_t>>(field(doc, "base_scalar"), "base_scalar");
  for (auto& counts : as<std::vector<std::vector<std::uint64_t>>>(field(doc, "base_histogram"), "base_histogram")) {
    s.base_histogram.push_back(Histogram{std::move(counts)});
  }
  validate(s);
  return s;
}

void save_scheme(const Scheme& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path.string() + " for writing");
  out << scheme_to_json(s);
  if (!out) throw InputError("failed writing " + path.string());
}

Scheme load_scheme(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open scheme file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return scheme_from_json(buf.str());
}

}  // namespace cacount
