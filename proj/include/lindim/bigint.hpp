#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace lindim {

// Arbitrary-precision integer used for every dimension/cohomology formula.
// Naive dimension counts already overflow 64 bits for moderately large
// degrees, so all closed-form arithmetic goes through BigInt.
using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient with the zero extension: binomial(a, k) == 0
/// whenever a < k, negative a included. This is exactly the convention
/// that makes the alternating dimension sums self-truncating.
/// k must be non-negative.
BigInt binomial(long long a, long long k);

/// Decimal rendering (convenience for reports and tests).
std::string to_string(const BigInt& v);

}  // namespace lindim
