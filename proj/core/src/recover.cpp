#include "straus/recover.hpp"

#include <string>

#include "straus/arith.hpp"

namespace straus {
namespace {

std::string describe(u64 p, u64 x, u128 y) {
  return "(p=" + std::to_string(p) + ", x=" + std::to_string(x) + ", y=" + to_string(y) + ")";
}

// z determined by 1/z = 4/p - 1/x - 1/y, i.e. z = pxy / (4xy - p(x + y)).
// Also returns the denominator 4xy - p(x + y), which is the recovered d for TypeI
// and p*d for TypeII.
struct Completion {
  u128 denominator = 0;
  u128 z = 0;
};

Completion complete_solution(u64 p, u64 x, u128 y, const char* op) {
  auto invalid = [&](const std::string& why) {
    return InvalidSolutionError(std::string(op) + describe(p, x, y) + ": " + why);
  };
  if (x == 0 || y < x) throw invalid("need 1 <= x <= y");
  const u128 lhs = mul_checked(mul_checked(4, x), y);
  const u128 rhs = mul_checked(p, add_checked(x, y));
  if (lhs <= rhs) throw invalid("4/p - 1/x - 1/y is not positive");
  const u128 denominator = lhs - rhs;
  const u128 numerator = mul_checked(mul_checked(p, x), y);
  if (numerator % denominator != 0) throw invalid("no integral z");
  const u128 z = numerator / denominator;
  if (z < y) throw invalid("completing z is smaller than y");
  return {denominator, z};
}

// Re-checks every claim of the necessary condition for the recovered witness.
Witness certify(const Witness& w, u128 y, u128 z, const char* op) {
  auto violation = [&](const std::string& why) {
    return CorrespondenceViolation(std::string(op) + describe(w.p, w.x, y) + ", d=" + std::to_string(w.d) + ": " +
                                   why);
  };
  const XRange r = x_range(w.p);
  if (w.x < r.lo || w.x > r.hi) throw violation("x outside [ceil(p/4), ceil(p/2)]");
  if (w.d == 0) throw violation("d is not positive");
  if ((static_cast<u128>(w.x) * w.x) % w.d != 0) throw violation("d does not divide x^2");
  const bool condition =
      w.type == SolutionType::TypeI ? check_type1(w.p, w.x, w.d) : check_type2(w.p, w.x, w.d);
  if (!condition) throw violation("modular condition fails");
  Solution rebuilt;
  try {
    rebuilt = build_solution(w);
  } catch (const InternalConsistencyError& e) {
    throw violation(std::string("rebuild failed: ") + e.what());
  }
  if (rebuilt.y != y) throw violation("rebuilt y=" + to_string(rebuilt.y) + " differs");
  if (rebuilt.z != z) throw violation("rebuilt z=" + to_string(rebuilt.z) + " differs");
  return w;
}

}  // namespace

SolutionType classify_solution(u64 p, u128 x, u128 y, u128 z) {
  if (x == 0 || !(x <= y && y <= z)) throw InvalidSolutionError("classify_solution: need 1 <= x <= y <= z");
  if (!verify_identity(p, x, y, z)) {
    throw InvalidSolutionError("classify_solution: (" + to_string(x) + ", " + to_string(y) + ", " + to_string(z) +
                               ") does not solve 4/" + std::to_string(p));
  }
  return y % p == 0 ? SolutionType::TypeII : SolutionType::TypeI;
}

Witness recover_type1(u64 p, u64 x, u128 y) {
  constexpr const char* op = "recover_type1";
  if (!is_prime(p)) throw DomainError("recover_type1: p is not prime");
  if (y % p == 0) throw InvalidSolutionError(std::string(op) + describe(p, x, y) + ": p | y, not a TypeI solution");
  const Completion c = complete_solution(p, x, y, op);
  // (4x - p)y - px == 4xy - p(x + y)
  if (c.denominator > UINT64_MAX) throw CorrespondenceViolation(std::string(op) + describe(p, x, y) + ": d exceeds x^2");
  const Witness w{p, x, static_cast<u64>(c.denominator), SolutionType::TypeI};
  return certify(w, y, c.z, op);
}

Witness recover_type2(u64 p, u64 x, u128 y) {
  constexpr const char* op = "recover_type2";
  if (!is_prime(p)) throw DomainError("recover_type2: p is not prime");
  if (y % p != 0) throw InvalidSolutionError(std::string(op) + describe(p, x, y) + ": p does not divide y");
  const Completion c = complete_solution(p, x, y, op);
  // (4x - p)(y/p) - x == (4xy - p(x + y)) / p
  if (c.denominator % p != 0) throw CorrespondenceViolation(std::string(op) + describe(p, x, y) + ": d not integral");
  const u128 d = c.denominator / p;
  if (d > x) throw CorrespondenceViolation(std::string(op) + describe(p, x, y) + ": d > x");
  const Witness w{p, x, static_cast<u64>(d), SolutionType::TypeII};
  return certify(w, y, c.z, op);
}

Witness recover(u64 p, u128 x, u128 y, u128 z) {
  const SolutionType type = classify_solution(p, x, y, z);
  const u64 x64 = to_u64_checked(x);
  const Witness w = type == SolutionType::TypeI ? recover_type1(p, x64, y) : recover_type2(p, x64, y);
  // recover_type{1,2} rebuilt z from the identity; it must be this z.
  if (build_solution(w).z != z) throw CorrespondenceViolation("recover: rebuilt z differs from input");
  return w;
}

}  // namespace straus
