#include "straus/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "straus/arith.hpp"
#include "straus/crosscheck.hpp"
#include "straus/witness.hpp"
#include "support/oracles.hpp"

namespace straus {
namespace {

TEST(SolveBruteforce, Examples) {
  EXPECT_EQ(solve_bruteforce(2), (std::vector<Triple>{{1, 2, 2}}));
  EXPECT_EQ(solve_bruteforce(4), (std::vector<Triple>{{2, 3, 6}, {2, 4, 4}, {3, 3, 3}}));
  EXPECT_EQ(solve_bruteforce(5), (std::vector<Triple>{{2, 4, 20}, {2, 5, 10}}));
}

TEST(SolveBruteforce, NoTypeISolutionAt73WithX19) {
  const auto sols = solve_bruteforce(73);
  EXPECT_EQ(std::count_if(sols.begin(), sols.end(), [](const Triple& t) { return t.x == 19 && t.y % 73 != 0; }), 0);
}

TEST(SolveBruteforce, Errors) {
  EXPECT_THROW(solve_bruteforce(1), DomainError);
  EXPECT_THROW(solve_bruteforce(0), DomainError);
  EXPECT_THROW(solve_bruteforce(100'001), ResourceLimitError);
  EXPECT_THROW(solve_bruteforce(50, 49), ResourceLimitError);
}

TEST(SolveBruteforce, MatchesWideReferenceSearchForAllNUpTo150) {
  for (u64 n = 2; n <= 150; ++n) {
    std::vector<Triple> expected;
    for (auto [x, y, z] : testing::naive_solutions(n)) expected.push_back({x, y, z});
    std::sort(expected.begin(), expected.end());
    ASSERT_EQ(solve_bruteforce(n), expected) << n;
  }
}

TEST(SolveBruteforce, TriplesAreOrderedAndExact) {
  for (u64 n : {2ull, 17ull, 360ull, 997ull, 1024ull}) {
    const auto sols = solve_bruteforce(n);
    EXPECT_TRUE(std::is_sorted(sols.begin(), sols.end()));
    for (const Triple& t : sols) {
      ASSERT_TRUE(t.x <= t.y && t.y <= t.z);
      ASSERT_TRUE(verify_identity(n, t.x, t.y, t.z));
    }
  }
}

TEST(SolveBruteforce, PrimeStructureBelow700) {
  for (u64 p : primes_in_range(2, 700)) {
    const XRange r = x_range(p);
    for (const Triple& t : solve_bruteforce(p)) {
      ASSERT_TRUE(structural_violations(p, t).empty()) << p;
      ASSERT_GE(t.x, r.lo) << p;
      ASSERT_LE(t.x, r.hi) << p;
    }
  }
}

TEST(SolveBruteforce, WideLoopAgreesWithNarrowLoop) {
  for (u64 n = 2; n <= 400; ++n) ASSERT_EQ(detail::solve_bruteforce_wide(n), solve_bruteforce(n)) << n;
}

TEST(StructuralViolations, FlagsEachCondition) {
  EXPECT_TRUE(structural_violations(5, {2, 4, 20}).empty());
  EXPECT_EQ(structural_violations(5, {5, 4, 3}).size(), 2u);     // p | x and p does not divide z
  EXPECT_EQ(structural_violations(2, {4, 4, 4}).size(), 4u);     // p | x and p^2 | x, y, z
}

}  // namespace
}  // namespace straus
