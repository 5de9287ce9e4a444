#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cacount/scheme.hpp"

namespace cacount {

// Scheme file: a JSON object with keys, in this order,
//   "p", "vars", "polynomial", "q0", "states", "transitions",
//   "base_scalar", "base_histogram".
// Transition indices are 1-based in the file. One key per line; the output
// is byte-deterministic so that load -> save reproduces the input.
std::string scheme_to_json(const Scheme& s);
Scheme scheme_from_json(std::string_view text);

void save_scheme(const Scheme& s, const std::filesystem::path& path);
Scheme load_scheme(const std::filesystem::path& path);

}  // namespace cacount
