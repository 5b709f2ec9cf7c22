#include "straus/oracle.hpp"

#include <algorithm>
#include <string>

namespace straus {
namespace {

// Walks y in [y_lo, y_hi] with t = m*y - nx and num = nx*y maintained incrementally.
template <typename Int>
void scan_y(u64 x, Int m, Int nx, Int y_lo, Int y_hi, std::vector<Triple>& out) {
  Int y = y_lo;
  // Skip the y with m*y <= nx; the widened lower bound can land there.
  while (y <= y_hi && m * y <= nx) ++y;
  if (y > y_hi) return;
  Int t = m * y - nx;
  Int num = nx * y;
  for (; y <= y_hi; ++y, t += m, num += nx) {
    if (num % t != 0) continue;
    const Int z = num / t;
    if (z >= y) out.push_back({x, static_cast<u64>(y), to_u64_checked(z)});
  }
}

std::vector<Triple> solve(u64 n, u64 cap, bool force_wide) {
  if (n < 2) throw DomainError("solve_bruteforce: n must be at least 2");
  if (n > cap) {
    throw ResourceLimitError("solve_bruteforce: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  if (n > (u64{1} << 40)) throw OverflowError("solve_bruteforce: n too large for 128-bit enumeration");

  std::vector<Triple> out;
  // 1/x < 4/n <= 3/x, widened by one on each side and filtered by 4x > n.
  const u64 x_first = std::max<u64>(1, n / 4);
  const u64 x_last = 3 * n / 4 + 1;
  for (u64 x = x_first; x <= x_last; ++x) {
    if (4 * x <= n) continue;
    const u128 m = u128{4} * x - n;
    const u128 nx = static_cast<u128>(n) * x;
    // 1/y < 4/n - 1/x  =>  y > nx/m;   2/y >= 4/n - 1/x  =>  y <= 2nx/m.
    const u128 y_lo_exact = std::max<u128>(x, nx / m + 1);
    const u128 y_lo = std::max<u128>(x, y_lo_exact - 1);
    const u128 y_hi = 2 * nx / m + 1;
    if (y_lo > y_hi) continue;

    const u128 worst = mul_checked(nx, y_hi + 1);
    if (!force_wide && worst <= kU64Max && mul_checked(m, y_hi + 1) <= kU64Max) {
      scan_y<u64>(x, static_cast<u64>(m), static_cast<u64>(nx), static_cast<u64>(y_lo), static_cast<u64>(y_hi), out);
    } else {
      scan_y<u128>(x, m, nx, y_lo, y_hi, out);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Triple> solve_bruteforce(u64 n, u64 cap) { return solve(n, cap, false); }

std::vector<Triple> detail::solve_bruteforce_wide(u64 n, u64 cap) { return solve(n, cap, true); }

}  // namespace straus
