#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace twotree {

/// Exact nonnegative integer used for every tree count.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& value) { return value.str(); }

inline BigCount parse_decimal(const std::string& text) { return BigCount(text); }

}  // namespace twotree
