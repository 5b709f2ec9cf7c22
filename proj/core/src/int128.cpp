#include "straus/int128.hpp"

#include <algorithm>

namespace straus {

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

u128 parse_u128(const std::string& s) {
  if (s.empty()) throw DomainError("empty integer literal");
  u128 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw DomainError("not a nonnegative integer: '" + s + "'");
    u128 next;
    if (__builtin_mul_overflow(v, u128{10}, &next) ||
        __builtin_add_overflow(next, static_cast<u128>(c - '0'), &next)) {
      throw DomainError("integer literal out of range: '" + s + "'");
    }
    v = next;
  }
  return v;
}

}  // namespace straus
