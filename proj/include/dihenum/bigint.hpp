#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace dihenum {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown when a division that must be exact leaves a remainder. Always an
/// implementation bug, never a consequence of valid input.
class NonIntegerResult : public std::logic_error {
 public:
  NonIntegerResult(const BigInt& numerator, long long divisor)
      : std::logic_error("non-integer result: " + numerator.str() + " / " +
                         std::to_string(divisor)) {}
};

inline BigInt exact_div(const BigInt& numerator, long long divisor) {
  if (numerator % divisor != 0) throw NonIntegerResult(numerator, divisor);
  return numerator / divisor;
}

inline BigInt pow2(long long e) { return BigInt(1) << e; }

}  // namespace dihenum
