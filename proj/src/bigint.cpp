#include "catrec/bigint.hpp"

#include <vector>

#include "catrec/error.hpp"

namespace catrec {
namespace {

constexpr int kPascalRows = 160;

const std::vector<std::vector<BigInt>>& pascal_triangle() {
  static const std::vector<std::vector<BigInt>> rows = [] {
    std::vector<std::vector<BigInt>> t(kPascalRows);
    for (int a = 0; a < kPascalRows; ++a) {
      t[a].resize(a + 1);
      t[a][0] = t[a][a] = 1;
      for (int b = 1; b < a; ++b) t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
    }
    return t;
  }();
  return rows;
}

}  // namespace

BigInt binomial(std::int64_t top, std::int64_t bottom) {
  if (bottom < 0) return 0;
  if (bottom == 0) return 1;
  if (top < 0 || bottom > top) return 0;
  if (top < kPascalRows) return pascal_triangle()[top][bottom];
  if (bottom > top - bottom) bottom = top - bottom;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= bottom; ++i) {
    result *= top - bottom + i;
    result /= i;
  }
  return result;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw Error(ErrorKind::InvalidInput, "empty decimal string");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::InvalidInput, "bad decimal digit in '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace catrec
