#pragma once

#include <cstdint>
#include <string>

namespace sascone {

using Int = std::int64_t;
// Products of up to four validated parameters; see kMaxParameter.
using WideInt = __int128;

// Join, ray and profile integers are capped so that every product formed by
// the library fits in WideInt and every rational bound fits in Int.
inline constexpr Int kMaxParameter = (Int{1} << 31) - 1;

WideInt gcd_wide(WideInt a, WideInt b);

bool fits_int64(WideInt value);

// Narrows or throws Error(Overflow).
Int narrow(WideInt value, const char* context);

std::string to_string_wide(WideInt value);

// Parses a decimal integer; throws Error(InvalidArgument) on junk or overflow.
Int parse_int(const std::string& text);

}  // namespace sascone
