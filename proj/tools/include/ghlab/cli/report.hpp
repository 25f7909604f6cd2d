#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ghlab::cli {

using nlohmann::json;

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kIoOrParse = 2,
  kSearchExhausted = 3,
};

struct InputDigest {
  std::string name;    // file path or "args"
  std::string digest;  // FNV-1a 64, hex
};

// Everything a command produces. `results` is the payload; `runtime` holds
// the parts that may legitimately differ between runs (timing, threads) and
// is therefore left out of the results digest.
struct Report {
  std::string command;
  std::vector<std::string> args;
  std::vector<InputDigest> inputs;
  json results = json::object();
  json runtime = json::object();
  double elapsed_ms = 0.0;
  std::string version;
  int exit_code = kOk;

  std::string results_digest() const;
};

std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t v);

json to_json(const Report& r);
Report report_from_json(const json& j);

/// Indented key: value listing of the same tree the JSON form carries.
std::string render_text(const Report& r);

}  // namespace ghlab::cli
