#pragma once

#include <functional>
#include <vector>

#include "straus/int128.hpp"

namespace straus {

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-power decomposition of n. Empty factor list iff n == 1.
struct Factorization {
  u64 n = 1;
  std::vector<PrimePower> factors;  // primes strictly increasing

  /// Recomputes n from the factors (checked).
  u64 product() const;
  /// Number of divisors of n^power.
  u64 divisor_count(unsigned power = 1) const;
};

/// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime(u64 n);

/// Largest hi accepted by the segmented sieve; the base-prime table grows with sqrt(hi).
inline constexpr u64 kSieveMaxHi = u64{1} << 48;

/// Calls visit(p) for each prime in [lo, hi], ascending. Memory is one segment plus
/// the base primes up to sqrt(hi).
void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& visit);

/// Primes in [lo, hi], ascending. Throws EmptyRangeError when lo > hi.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

/// Throws DomainError for n == 0.
Factorization factorize(u64 n);

/// All divisors of x^2 in ascending order, generated from factorize(x) with every
/// exponent doubled. Throws OverflowError when x^2 does not fit in 64 bits.
std::vector<u64> divisors_of_square(u64 x);

/// Same, reusing an existing factorization of x.
std::vector<u64> divisors_of_square(const Factorization& fx);

}  // namespace straus
