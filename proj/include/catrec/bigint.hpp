#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace catrec {

using BigInt = boost::multiprecision::cpp_int;

// Binomial coefficient extended to all integer arguments:
// C(a, b) = 0 for b < 0; C(a, 0) = 1 for every a (including negative a);
// C(a, b) = 0 for a < 0 and b >= 1; otherwise the usual value (0 when b > a).
BigInt binomial(std::int64_t top, std::int64_t bottom);

std::string to_decimal(const BigInt& value);
BigInt parse_decimal(std::string_view text);

}  // namespace catrec
