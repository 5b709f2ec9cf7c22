#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "straus/int128.hpp"

namespace straus {

/// TypeI: p does not divide y. TypeII: p divides y.
enum class SolutionType { TypeI, TypeII };

std::string_view to_string(SolutionType t);

/// Inclusive search interval for the smallest denominator: [ceil(p/4), ceil(p/2)].
struct XRange {
  u64 lo = 0;
  u64 hi = 0;

  /// Largest offset k = x - lo.
  u64 max_k() const { return hi - lo; }
  friend bool operator==(const XRange&, const XRange&) = default;
};

/// A divisor d of x^2 satisfying the type's congruence modulo 4x - p.
struct Witness {
  u64 p = 0;
  u64 x = 0;
  u64 d = 0;
  SolutionType type = SolutionType::TypeI;

  /// Offset of x from ceil(p/4).
  u64 k() const;
  friend bool operator==(const Witness&, const Witness&) = default;
  friend auto operator<=>(const Witness&, const Witness&) = default;
};

/// 4/p = 1/x + 1/y + 1/z with x <= y <= z.
struct Solution {
  u64 p = 0;
  u64 x = 0;
  u128 y = 0;
  u128 z = 0;
  SolutionType type = SolutionType::TypeI;

  friend bool operator==(const Solution&, const Solution&) = default;
};

/// Throws DomainError unless p is prime.
XRange x_range(u64 p);

/// (4x - p) | (p*x + d). Throws DomainError if x is outside x_range(p) or d does not
/// divide x^2.
bool check_type1(u64 p, u64 x, u64 d);

/// d <= x and (4x - p) | (x + d). Same preconditions as check_type1.
bool check_type2(u64 p, u64 x, u64 d);

/// Builds (y, z) from the closed forms
///   TypeI:  y = (p*x + d) / (4x - p),  z = p*(x + p*x^2/d) / (4x - p)
///   TypeII: y = p*(x + d) / (4x - p),  z = p*(x + x^2/d) / (4x - p)
/// Structural preconditions (prime p, x in range, d | x^2) raise DomainError. The
/// congruence itself is not pre-checked: an inexact division, broken ordering or
/// wrong p-divisibility of y raises InternalConsistencyError.
Solution build_solution(const Witness& w);

/// Witnesses with this particular x, ordered by d then type (TypeI first).
std::vector<Witness> witnesses_at(u64 p, u64 x);

/// Every witness of p, ordered by (x, d, TypeI before TypeII).
std::vector<Witness> enumerate_witnesses(u64 p);

/// The first element of enumerate_witnesses(p), found without enumerating the rest.
std::optional<Witness> first_witness(u64 p);

/// 4xyz == p(yz + xz + xy) in exact arbitrary-precision arithmetic.
bool verify_identity(u64 p, u128 x, u128 y, u128 z);

}  // namespace straus
