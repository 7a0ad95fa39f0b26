#include "sascone/integer.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "sascone/error.hpp"

namespace sascone {

WideInt gcd_wide(WideInt a, WideInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    WideInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_int64(WideInt value) {
  return value >= std::numeric_limits<Int>::min() &&
         value <= std::numeric_limits<Int>::max();
}

Int narrow(WideInt value, const char* context) {
  if (!fits_int64(value)) {
    throw Error(ErrorKind::Overflow,
                std::string("integer overflow in ") + context);
  }
  return static_cast<Int>(value);
}

std::string to_string_wide(WideInt value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  std::string digits;
  // Work with negative remainders so the minimum value does not overflow.
  WideInt v = negative ? value : -value;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Int parse_int(const std::string& text) {
  Int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorKind::InvalidArgument,
                "not an integer: '" + text + "'");
  }
  return value;
}

}  // namespace sascone
