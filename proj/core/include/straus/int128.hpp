#pragma once

#include <cstdint>
#include <string>

#include "straus/errors.hpp"

namespace straus {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr u128 kU64Max = static_cast<u128>(UINT64_MAX);

/// a * b, throwing OverflowError if the product leaves 128 bits.
inline u128 mul_checked(u128 a, u128 b) {
  u128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit multiplication overflow");
  return r;
}

inline u128 add_checked(u128 a, u128 b) {
  u128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit addition overflow");
  return r;
}

/// Narrow to 64 bits or throw.
inline u64 to_u64_checked(u128 v) {
  if (v > kU64Max) throw OverflowError("value does not fit in 64 bits");
  return static_cast<u64>(v);
}

inline constexpr u64 ceil_div(u64 a, u64 b) { return a / b + (a % b != 0 ? 1 : 0); }

/// Decimal rendering; std::to_string has no overload for __int128.
std::string to_string(u128 v);

/// Parse a decimal string into a u128. Throws DomainError on junk or overflow.
u128 parse_u128(const std::string& s);

}  // namespace straus
