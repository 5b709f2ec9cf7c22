#pragma once

#include <vector>

#include "straus/int128.hpp"

namespace straus {

/// An ordered triple x <= y <= z with 4/n = 1/x + 1/y + 1/z.
struct Triple {
  u64 x = 0;
  u64 y = 0;
  u64 z = 0;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

inline constexpr u64 kOracleDefaultCap = 100'000;

/// Exhaustive solver for any n >= 2, independent of the witness machinery.
///
/// x runs over n/4 < x <= 3n/4; for each x, y runs over
/// [max(x, ceil(nx/(4x-n))), floor(2nx/(4x-n))] widened by one on each side, and
/// z = nxy / ((4x-n)y - nx) is kept when exact and >= y. Output is sorted
/// lexicographically.
///
/// Throws DomainError for n < 2 and ResourceLimitError for n > cap.
std::vector<Triple> solve_bruteforce(u64 n, u64 cap = kOracleDefaultCap);

namespace detail {
/// solve_bruteforce with the 128-bit inner loop forced for every x; for testing.
std::vector<Triple> solve_bruteforce_wide(u64 n, u64 cap = kOracleDefaultCap);
}  // namespace detail

}  // namespace straus
