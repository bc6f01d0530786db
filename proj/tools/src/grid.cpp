#include "metatoeplitz_cli/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "metatoeplitz/error.hpp"

namespace metatoeplitz::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

double to_double(const std::string& s, const std::string& flag) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw InvalidInputError(flag + ": '" + s + "' is not a finite number");
  }
  return v;
}

long to_integer(const std::string& s, const std::string& flag) {
  long v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) throw InvalidInputError(flag + ": '" + s + "' is not an integer");
  return v;
}

}  // namespace

std::vector<double> parse_range(const std::string& spec, const std::string& flag) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) throw InvalidInputError(flag + ": expected a:b:steps");
  const double a = to_double(parts[0], flag);
  const double b = to_double(parts[1], flag);
  const long steps = to_integer(parts[2], flag);
  if (steps < 1) throw InvalidInputError(flag + ": steps must be at least 1");
  if (steps > 1000000) throw InvalidInputError(flag + ": too many steps");
  if (steps == 1) {
    if (a != b) throw InvalidInputError(flag + ": a single step needs a == b");
    return {a};
  }
  if (!(a < b)) throw InvalidInputError(flag + ": expected a < b");
  std::vector<double> values(static_cast<std::size_t>(steps));
  for (long i = 0; i < steps; ++i) values[static_cast<std::size_t>(i)] = a + (b - a) * static_cast<double>(i) / (steps - 1);
  values.back() = b;
  return values;
}

std::vector<double> parse_list(const std::string& spec, const std::string& flag) {
  std::vector<double> values;
  std::set<double> seen;
  for (const auto& part : split(spec, ',')) {
    const double v = to_double(part, flag);
    if (!seen.insert(v).second) throw InvalidInputError(flag + ": duplicate value " + part);
    values.push_back(v);
  }
  return values;
}

std::vector<int> parse_sizes(const std::string& spec, const std::string& flag) {
  std::vector<int> sizes;
  for (const auto& part : split(spec, ',')) {
    const long v = to_integer(part, flag);
    if (v < 1 || v > 400) throw InvalidInputError(flag + ": sizes must lie in [1, 400]");
    if (!sizes.empty() && v <= sizes.back()) throw InvalidInputError(flag + ": sizes must increase");
    sizes.push_back(static_cast<int>(v));
  }
  return sizes;
}

}  // namespace metatoeplitz::cli
