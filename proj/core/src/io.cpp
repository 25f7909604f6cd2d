#include "ghlab/io.hpp"

#include <cctype>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ghlab {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

double finite_number(const json& v, const char* what) {
  if (!v.is_number()) throw Error(ErrorKind::ParseError, std::string(what) + " must be a number");
  double d = v.get<double>();
  if (!std::isfinite(d)) throw Error(ErrorKind::ParseError, std::string(what) + " must be finite");
  return d;
}

FiniteMetricSpace from_matrix_object(const json& doc, double tol) {
  const auto& m = doc.at("matrix");
  if (!m.is_array()) throw Error(ErrorKind::ParseError, "\"matrix\" must be an array of rows");
  Grid grid;
  for (const auto& row : m) {
    if (!row.is_array()) throw Error(ErrorKind::ParseError, "matrix rows must be arrays");
    auto& out = grid.emplace_back();
    for (const auto& v : row) out.push_back(finite_number(v, "matrix entry"));
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const auto& l = doc.at("labels");
    if (!l.is_array()) throw Error(ErrorKind::ParseError, "\"labels\" must be an array");
    for (const auto& s : l) {
      if (!s.is_string()) throw Error(ErrorKind::ParseError, "labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }
  return validate(grid, tol, std::move(labels));
}

FiniteMetricSpace from_condensed_object(const json& doc, double tol) {
  const auto& jn = doc.at("n");
  if (!jn.is_number_integer() || jn.get<long long>() < 1) {
    throw Error(ErrorKind::ParseError, "\"n\" must be a positive integer");
  }
  const auto& jr = doc.at("rho");
  if (!jr.is_array()) throw Error(ErrorKind::ParseError, "\"rho\" must be an array");
  std::vector<double> rho;
  for (const auto& v : jr) rho.push_back(finite_number(v, "rho entry"));
  return FiniteMetricSpace::from_condensed(static_cast<std::size_t>(jn.get<long long>()),
                                           std::move(rho), tol);
}

FiniteMetricSpace from_object(const json& doc, double tol) {
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "top-level JSON value must be an object");
  try {
    if (doc.contains("matrix")) return from_matrix_object(doc, tol);
    if (doc.contains("rho")) return from_condensed_object(doc, tol);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  throw Error(ErrorKind::ParseError, "expected a \"matrix\" or \"rho\" key");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view field, std::size_t line) {
  field = trim(field);
  std::string buf(field);
  char* end = nullptr;
  errno = 0;
  double d = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size() || errno == ERANGE) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": not a number: '" + buf + "'");
  }
  if (!std::isfinite(d)) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": non-finite value");
  }
  return d;
}

}  // namespace

FiniteMetricSpace parse_matrix_json(std::string_view text, double tol) {
  auto doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("matrix")) throw Error(ErrorKind::ParseError, "missing \"matrix\"");
  return from_object(doc, tol);
}

FiniteMetricSpace parse_condensed_json(std::string_view text, double tol) {
  auto doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("rho")) throw Error(ErrorKind::ParseError, "missing \"rho\"");
  return from_object(doc, tol);
}

FiniteMetricSpace parse_csv(std::string_view text, double tol) {
  Grid grid;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    auto& row = grid.emplace_back();
    for (;;) {
      auto comma = line.find(',');
      row.push_back(parse_real(line.substr(0, comma), line_no));
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
  }
  if (grid.empty()) throw Error(ErrorKind::ParseError, "empty CSV input");
  return validate(grid, tol);
}

FiniteMetricSpace parse_space(std::string_view text, double tol) {
  auto body = trim(text);
  if (!body.empty() && body.front() == '{') return from_object(parse_json(body), tol);
  return parse_csv(body, tol);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::IoError, "read failed: " + path);
  return ss.str();
}

FiniteMetricSpace load_space(const std::string& path, double tol) {
  return parse_space(read_file(path), tol);
}

std::string to_condensed_json(const FiniteMetricSpace& x) {
  json doc;
  doc["n"] = x.size();
  doc["rho"] = std::vector<double>(x.rho().begin(), x.rho().end());
  return doc.dump();
}

std::string to_matrix_json(const FiniteMetricSpace& x) {
  json doc;
  if (!x.labels().empty()) doc["labels"] = x.labels();
  doc["matrix"] = x.matrix();
  return doc.dump();
}

std::string to_csv(const FiniteMetricSpace& x) {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j) out += ',';
      auto r = std::to_chars(buf, buf + sizeof buf, x.distance(i, j));
      out.append(buf, r.ptr);
    }
    out += '\n';
  }
  return out;
}

}  // namespace ghlab
