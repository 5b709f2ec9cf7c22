#pragma once

#include "straus/witness.hpp"

namespace straus {

/// TypeII iff p | y. Throws InvalidSolutionError unless (x, y, z) is an ordered
/// solution for p.
SolutionType classify_solution(u64 p, u128 x, u128 y, u128 z);

/// d = (4x - p)y - p*x for a TypeI solution with smallest terms x <= y.
///
/// Re-derives everything the necessary condition claims: x lies in x_range(p),
/// d >= 1, d | x^2, check_type1 holds, and build_solution reproduces y together with
/// z = pxy / (4xy - p(x + y)). Any failure raises CorrespondenceViolation. Input that
/// is not a TypeI solution at all (p | y, or no integral z >= y) raises
/// InvalidSolutionError.
Witness recover_type1(u64 p, u64 x, u128 y);

/// d = (4x - p)(y/p) - x for a TypeII solution. Also asserts d <= x.
Witness recover_type2(u64 p, u64 x, u128 y);

/// Dispatches on classify_solution and additionally checks the rebuilt z.
Witness recover(u64 p, u128 x, u128 y, u128 z);

}  // namespace straus
