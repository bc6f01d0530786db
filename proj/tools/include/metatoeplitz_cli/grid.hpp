#pragma once

#include <string>
#include <vector>

namespace metatoeplitz::cli {

/// "a:b:steps" -> steps equally spaced values from a to b inclusive. A single
/// step requires a == b.
std::vector<double> parse_range(const std::string& spec, const std::string& flag);

/// "v[,v...]" -> values in the given order; duplicates are rejected.
std::vector<double> parse_list(const std::string& spec, const std::string& flag);

/// "10,20,30" -> positive integers, strictly increasing.
std::vector<int> parse_sizes(const std::string& spec, const std::string& flag);

}  // namespace metatoeplitz::cli
