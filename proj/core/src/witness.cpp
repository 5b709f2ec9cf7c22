#include "straus/witness.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "straus/arith.hpp"

namespace straus {
namespace {

using boost::multiprecision::cpp_int;

cpp_int big(u128 v) {
  cpp_int r = static_cast<u64>(v >> 64);
  r <<= 64;
  r += static_cast<u64>(v);
  return r;
}

// Range and divisibility preconditions shared by the checks and the builder.
void require_witness_shape(u64 p, u64 x, u64 d, const char* op) {
  const XRange r = x_range(p);
  if (x < r.lo || x > r.hi) {
    throw DomainError(std::string(op) + ": x=" + std::to_string(x) + " outside [" + std::to_string(r.lo) + ", " +
                      std::to_string(r.hi) + "] for p=" + std::to_string(p));
  }
  if (d == 0 || (static_cast<u128>(x) * x) % d != 0) {
    throw DomainError(std::string(op) + ": d=" + std::to_string(d) + " does not divide x^2");
  }
}

// Both congruences, assuming the shape has been validated.
bool congruent_type1(u64 p, u64 x, u64 d) {
  const u128 modulus = u128{4} * x - p;
  return (static_cast<u128>(p) * x + d) % modulus == 0;
}

bool congruent_type2(u64 p, u64 x, u64 d) {
  const u128 modulus = u128{4} * x - p;
  return d <= x && (static_cast<u128>(x) + d) % modulus == 0;
}

template <typename Visit>
bool visit_witnesses_at(u64 p, u64 x, Visit&& visit) {
  for (u64 d : divisors_of_square(x)) {
    if (congruent_type1(p, x, d) && visit(Witness{p, x, d, SolutionType::TypeI})) return true;
    if (congruent_type2(p, x, d) && visit(Witness{p, x, d, SolutionType::TypeII})) return true;
  }
  return false;
}

void require_prime(u64 p, const char* op) {
  if (!is_prime(p)) throw DomainError(std::string(op) + ": " + std::to_string(p) + " is not prime");
}

// hi^2 must fit in 64 bits for divisor enumeration.
void require_enumerable(u64 p) {
  if (x_range(p).hi > UINT32_MAX) throw OverflowError("witness search: ceil(p/2)^2 exceeds 64 bits");
}

}  // namespace

std::string_view to_string(SolutionType t) { return t == SolutionType::TypeI ? "I" : "II"; }

u64 Witness::k() const { return x - ceil_div(p, 4); }

XRange x_range(u64 p) {
  require_prime(p, "x_range");
  return {ceil_div(p, 4), ceil_div(p, 2)};
}

bool check_type1(u64 p, u64 x, u64 d) {
  require_witness_shape(p, x, d, "check_type1");
  return congruent_type1(p, x, d);
}

bool check_type2(u64 p, u64 x, u64 d) {
  require_witness_shape(p, x, d, "check_type2");
  return congruent_type2(p, x, d);
}

Solution build_solution(const Witness& w) {
  require_witness_shape(w.p, w.x, w.d, "build_solution");
  const u64 p = w.p;
  const u64 x = w.x;
  const u128 modulus = u128{4} * x - p;
  const u128 cofactor = static_cast<u128>(x) * x / w.d;  // x^2 / d

  u128 y_num;
  u128 z_num;
  if (w.type == SolutionType::TypeI) {
    y_num = add_checked(static_cast<u128>(p) * x, w.d);
    z_num = mul_checked(p, add_checked(x, mul_checked(p, cofactor)));
  } else {
    y_num = mul_checked(p, add_checked(x, w.d));
    z_num = mul_checked(p, add_checked(x, cofactor));
  }

  auto fail = [&](const std::string& what) {
    return InternalConsistencyError("build_solution(p=" + std::to_string(p) + ", x=" + std::to_string(x) +
                                    ", d=" + std::to_string(w.d) + ", type " + std::string(to_string(w.type)) +
                                    "): " + what);
  };
  if (y_num % modulus != 0) throw fail("y is not integral");
  if (z_num % modulus != 0) throw fail("z is not integral");

  Solution s{p, x, y_num / modulus, z_num / modulus, w.type};
  if (!(x <= s.y && s.y <= s.z)) throw fail("x <= y <= z violated");
  const bool p_divides_y = s.y % p == 0;
  if (p_divides_y != (w.type == SolutionType::TypeII)) throw fail("p-divisibility of y contradicts type");
  if (!verify_identity(p, s.x, s.y, s.z)) throw fail("4/p = 1/x + 1/y + 1/z does not hold");
  return s;
}

std::vector<Witness> witnesses_at(u64 p, u64 x) {
  require_witness_shape(p, x, 1, "witnesses_at");
  std::vector<Witness> out;
  visit_witnesses_at(p, x, [&](const Witness& w) {
    out.push_back(w);
    return false;
  });
  return out;
}

std::vector<Witness> enumerate_witnesses(u64 p) {
  const XRange r = x_range(p);
  require_enumerable(p);
  std::vector<Witness> out;
  for (u64 x = r.lo; x <= r.hi; ++x) {
    visit_witnesses_at(p, x, [&](const Witness& w) {
      out.push_back(w);
      return false;
    });
  }
  return out;
}

std::optional<Witness> first_witness(u64 p) {
  const XRange r = x_range(p);
  require_enumerable(p);
  std::optional<Witness> found;
  for (u64 x = r.lo; x <= r.hi; ++x) {
    const bool stop = visit_witnesses_at(p, x, [&](const Witness& w) {
      found = w;
      return true;
    });
    if (stop) break;
  }
  return found;
}

bool verify_identity(u64 p, u128 x, u128 y, u128 z) {
  const cpp_int bx = big(x), by = big(y), bz = big(z);
  return 4 * bx * by * bz == cpp_int(p) * (by * bz + bx * bz + bx * by);
}

}  // namespace straus
