#include "ghlab/cli/report.hpp"

#include <charconv>
#include <cstdio>

namespace ghlab::cli {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string Report::results_digest() const { return hex64(fnv1a(results.dump())); }

json to_json(const Report& r) {
  json inputs = json::array();
  for (const auto& in : r.inputs) inputs.push_back({{"name", in.name}, {"digest", in.digest}});
  return {
      {"command", r.command},
      {"args", r.args},
      {"inputs", inputs},
      {"results", r.results},
      {"results_digest", r.results_digest()},
      {"runtime", r.runtime},
      {"elapsed_ms", r.elapsed_ms},
      {"version", r.version},
      {"exit_code", r.exit_code},
  };
}

Report report_from_json(const json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.args = j.at("args").get<std::vector<std::string>>();
  for (const auto& in : j.at("inputs")) {
    r.inputs.push_back({in.at("name").get<std::string>(), in.at("digest").get<std::string>()});
  }
  r.results = j.at("results");
  r.runtime = j.at("runtime");
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  r.version = j.at("version").get<std::string>();
  r.exit_code = j.at("exit_code").get<int>();
  return r;
}

namespace {

std::string scalar(const json& v) {
  if (v.is_number_float()) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v.get<double>());
    return std::string(buf, res.ptr);
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_flat_array(const json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v)
    if (e.is_object() || (e.is_array() && !is_flat_array(e))) return false;
  return true;
}

std::string flat(const json& v) {
  if (!v.is_array()) return scalar(v);
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += v[i].is_array() ? ", " : " ";
    s += flat(v[i]);
  }
  return s + "]";
}

void emit(std::string& out, const json& v, int depth) {
  const std::string pad(2 * depth, ' ');
  if (v.is_object()) {
    for (const auto& [k, e] : v.items()) {
      if (e.is_object() || (e.is_array() && !is_flat_array(e))) {
        out += pad + k + ":\n";
        emit(out, e, depth + 1);
      } else {
        out += pad + k + ": " + flat(e) + "\n";
      }
    }
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += pad + "- [" + std::to_string(i) + "]\n";
      emit(out, v[i], depth + 1);
    }
  } else {
    out += pad + scalar(v) + "\n";
  }
}

}  // namespace

std::string render_text(const Report& r) {
  std::string out = "ghlab " + r.version + " " + r.command;
  for (const auto& a : r.args) out += " " + a;
  out += "\n";
  for (const auto& in : r.inputs) out += "input " + in.name + " fnv1a=" + in.digest + "\n";
  emit(out, r.results, 0);
  out += "results_digest: " + r.results_digest() + "\n";
  for (const auto& [k, v] : r.runtime.items()) out += k + ": " + flat(v) + "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "elapsed_ms: %.3f\n", r.elapsed_ms);
  out += buf;
  out += "exit_code: " + std::to_string(r.exit_code) + "\n";
  return out;
}

}  // namespace ghlab::cli
