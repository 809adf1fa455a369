#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace infgon {

using Int = std::int64_t;

// Raised when an argument violates a documented precondition: an arc with
// neighbouring endpoints, a negative quiver index, a configuration outside
// the hypotheses of a witness query, a vanishing Hom space where a map was
// assumed.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A truncated tower whose tail has not settled within the supplied length.
class UnstableTower : public DomainError {
 public:
  using DomainError::DomainError;
};

// All coordinates live in 64-bit integers. Inputs are restricted to
// |value| <= 2^31 so every sum and difference formed internally is exact.
inline constexpr Int kCoordinateLimit = Int{1} << 31;

inline void check_coordinate(Int value, const char* what) {
  if (value > kCoordinateLimit || value < -kCoordinateLimit) {
    throw DomainError(std::string(what) + " out of supported range |v| <= 2^31: " +
                      std::to_string(value));
  }
}

}  // namespace infgon
