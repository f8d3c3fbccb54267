#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace causalgen {

/// Shortest decimal form that round-trips to the same double. Used for
/// every float written to config, graph, SCM, CSV, and result files so
/// serialization is bit-exact.
std::string format_double(double v);

std::string format_int(long long v);

std::optional<double> parse_double(std::string_view s);
std::optional<long long> parse_int(std::string_view s);
std::optional<bool> parse_bool(std::string_view s);

std::string_view trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

/// FNV-1a 64-bit content digest, reported as 16 hex digits.
std::string fnv1a_hex(std::string_view content);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace causalgen
