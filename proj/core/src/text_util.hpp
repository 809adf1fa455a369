#pragma once

#include <charconv>
#include <string>
#include <string_view>

#include "infgon/error.hpp"

namespace infgon::detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline Int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DomainError("malformed integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  }
  check_coordinate(value, "integer");
  return value;
}

}  // namespace infgon::detail
