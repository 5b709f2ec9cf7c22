#include "straus/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace straus {
namespace {

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Floor square root, exact for all 64-bit inputs.
u64 isqrt(u64 n) {
  auto r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

constexpr std::array<u64, 12> kMillerRabinBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

constexpr std::array<u64, 25> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                              43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// Brent's variant of Pollard rho. n must be odd and composite.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 m = 128;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const u64 f = pollard_brent(n);
  split_into(f, primes);
  split_into(n / f, primes);
}

std::vector<u64> simple_sieve(u64 limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<u64> out;
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace

u64 Factorization::product() const {
  u128 acc = 1;
  for (const auto& pp : factors) {
    for (unsigned e = 0; e < pp.exponent; ++e) acc = mul_checked(acc, pp.prime);
  }
  return to_u64_checked(acc);
}

u64 Factorization::divisor_count(unsigned power) const {
  u64 count = 1;
  for (const auto& pp : factors) count *= static_cast<u64>(pp.exponent) * power + 1;
  return count;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : kSmallPrimes) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kMillerRabinBases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& visit) {
  if (lo > hi) throw EmptyRangeError("primes_in_range: lo > hi");
  if (hi > kSieveMaxHi) throw DomainError("primes_in_range: hi exceeds sieve limit");
  lo = std::max<u64>(lo, 2);
  if (lo > hi) return;

  const std::vector<u64> base = simple_sieve(isqrt(hi));
  constexpr u64 kSegment = u64{1} << 18;
  std::vector<char> composite(kSegment);

  for (u64 seg_lo = lo; seg_lo <= hi; seg_lo += kSegment) {
    const u64 seg_hi = std::min(hi, seg_lo + kSegment - 1);
    const u64 len = seg_hi - seg_lo + 1;
    std::fill(composite.begin(), composite.begin() + static_cast<std::ptrdiff_t>(len), 0);
    for (u64 p : base) {
      if (p * p > seg_hi) break;
      u64 start = std::max(p * p, ceil_div(seg_lo, p) * p);
      for (u64 j = start; j <= seg_hi; j += p) composite[j - seg_lo] = 1;
    }
    for (u64 i = 0; i < len; ++i) {
      if (!composite[i]) visit(seg_lo + i);
    }
    if (seg_hi == hi) break;
  }
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
  std::vector<u64> out;
  for_each_prime(lo, hi, [&](u64 p) { out.push_back(p); });
  return out;
}

Factorization factorize(u64 n) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  Factorization f;
  f.n = n;
  std::vector<u64> primes;
  u64 rest = n;
  for (u64 p : kSmallPrimes) {
    while (rest % p == 0) {
      primes.push_back(p);
      rest /= p;
    }
  }
  // Odd trial divisors up to sqrt(rest) or a fixed bound; Pollard-Brent for the rest.
  constexpr u64 kTrialLimit = 1u << 16;
  for (u64 p = 101; p <= kTrialLimit && p * p <= rest; p += 2) {
    while (rest % p == 0) {
      primes.push_back(p);
      rest /= p;
    }
  }
  if (rest > 1) {
    if (rest < static_cast<u64>(kTrialLimit) * kTrialLimit) {
      primes.push_back(rest);
    } else {
      split_into(rest, primes);
    }
  }
  std::sort(primes.begin(), primes.end());
  for (u64 p : primes) {
    if (!f.factors.empty() && f.factors.back().prime == p) {
      ++f.factors.back().exponent;
    } else {
      f.factors.push_back({p, 1});
    }
  }
  return f;
}

std::vector<u64> divisors_of_square(const Factorization& fx) {
  if (fx.n > UINT32_MAX) throw OverflowError("divisors_of_square: x^2 exceeds 64 bits");
  std::vector<u64> divs;
  divs.reserve(fx.divisor_count(2));
  divs.push_back(1);
  for (const auto& pp : fx.factors) {
    const std::size_t existing = divs.size();
    u64 power = 1;
    for (unsigned e = 0; e < 2 * pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < existing; ++i) divs.push_back(divs[i] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<u64> divisors_of_square(u64 x) {
  if (x == 0) throw DomainError("divisors_of_square: x must be positive");
  if (x > UINT32_MAX) throw OverflowError("divisors_of_square: x^2 exceeds 64 bits");
  return divisors_of_square(factorize(x));
}

}  // namespace straus
