#pragma once

#include <string>
#include <vector>

#include "straus/oracle.hpp"
#include "straus/witness.hpp"

namespace straus {

/// Agreement between the witness route and the brute-force oracle for one prime.
struct CrossCheckResult {
  u64 p = 0;
  u64 witness_count[2] = {0, 0};  // by SolutionType
  u64 oracle_count[2] = {0, 0};
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Per type: witness-built solutions equal the oracle's as sets, the witness map is
/// injective, witness -> solution -> recovered witness is the identity, and oracle
/// solution -> recovered witness -> rebuilt solution is the identity.
CrossCheckResult cross_check_prime(u64 p, u64 oracle_cap = kOracleDefaultCap);

/// Structural facts of an oracle solution for prime p: p does not divide x, p | z,
/// and p^2 divides none of x, y, z. Returns one message per violation.
std::vector<std::string> structural_violations(u64 p, const Triple& t);

}  // namespace straus
