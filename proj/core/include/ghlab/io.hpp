#pragma once

#include <string>
#include <string_view>

#include "ghlab/metric_space.hpp"

namespace ghlab {

// Accepted text formats:
//   matrix JSON     {"labels": [str, ...]?, "matrix": [[real, ...], ...]}
//   condensed JSON  {"n": int, "rho": [real, ...]}
//   CSV             n rows of n comma-separated reals, no header
// NaN and infinities are rejected by every parser. Malformed text raises
// ParseError; well-formed text describing a non-metric raises the metric
// error kinds from validate().

FiniteMetricSpace parse_space(std::string_view text, double tol = kDefaultTolerance);
FiniteMetricSpace parse_matrix_json(std::string_view text, double tol = kDefaultTolerance);
FiniteMetricSpace parse_condensed_json(std::string_view text, double tol = kDefaultTolerance);
FiniteMetricSpace parse_csv(std::string_view text, double tol = kDefaultTolerance);

/// Reads a file and dispatches on its content (JSON object vs CSV).
FiniteMetricSpace load_space(const std::string& path, double tol = kDefaultTolerance);

std::string read_file(const std::string& path);

std::string to_condensed_json(const FiniteMetricSpace& x);
std::string to_matrix_json(const FiniteMetricSpace& x);
std::string to_csv(const FiniteMetricSpace& x);

}  // namespace ghlab
