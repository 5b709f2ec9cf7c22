#pragma once

// Test-only reference implementations. Deliberately naive and independent of the
// library's algorithms; used to compute expected values.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace straus::testing {

using u64 = std::uint64_t;

inline bool naive_is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 i = 2; i * i <= n; ++i) {
    if (n % i == 0) return false;
  }
  return true;
}

/// Divisors of x^2 by testing every d <= x and pairing it with x^2 / d.
inline std::vector<u64> naive_divisors_of_square(u64 x) {
  const u64 sq = x * x;
  std::set<u64> out;
  for (u64 d = 1; d <= x; ++d) {
    if (sq % d == 0) {
      out.insert(d);
      out.insert(sq / d);
    }
  }
  return {out.begin(), out.end()};
}

/// Exact check of 4/n = 1/x + 1/y + 1/z.
inline bool exact_identity(u64 n, u64 x, u64 y, u64 z) {
  using boost::multiprecision::cpp_int;
  return cpp_int(4) * x * y * z == cpp_int(n) * (cpp_int(y) * z + cpp_int(x) * z + cpp_int(x) * y);
}

/// Wide, dumb search: x in [1, n], y in [x, 2nx/(4x-n) + 2], z solved exactly from the
/// remainder 4/n - 1/x - 1/y as a reduced fraction with numerator 1.
inline std::vector<std::tuple<u64, u64, u64>> naive_solutions(u64 n) {
  using boost::multiprecision::cpp_int;
  std::vector<std::tuple<u64, u64, u64>> out;
  for (u64 x = 1; x <= n; ++x) {
    if (4 * x <= n) continue;
    const u64 y_end = 2 * n * x / (4 * x - n) + 2;
    for (u64 y = x; y <= y_end; ++y) {
      // remainder = (4xy - ny - nx) / (nxy)
      const cpp_int num = cpp_int(4) * x * y - cpp_int(n) * y - cpp_int(n) * x;
      if (num <= 0) continue;
      const cpp_int den = cpp_int(n) * x * y;
      if (den % num != 0) continue;
      const cpp_int z = den / num;
      if (z < y) continue;
      out.emplace_back(x, y, static_cast<u64>(z));
    }
  }
  return out;
}

/// Table as transcribed in tests/data: p -> ks.
inline std::map<u64, std::vector<u64>> load_table(const std::string& path) {
  std::ifstream f(path);
  std::map<u64, std::vector<u64>> rows;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::istringstream cells(line);
    std::string cell;
    std::getline(cells, cell, ',');
    auto& ks = rows[std::stoull(cell)];
    while (std::getline(cells, cell, ',')) ks.push_back(std::stoull(cell));
  }
  return rows;
}

}  // namespace straus::testing
