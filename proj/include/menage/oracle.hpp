#pragma once

#include "menage/exact.hpp"

namespace menage {

/// Ground truth by direct enumeration: counts assignments of n couples to
/// 2n labeled seats on a cycle with no adjacent spouses and no k cyclically
/// consecutive same-gender people. Rotations and reflections count as
/// distinct. Requires k >= 2 and 1 <= n <= 5 ((2n)! growth).
ExactInt brute_force(int k, int n);

/// Counts rooted cyclic gender sequences of length 2n (equal numbers of f
/// and m, no k cyclically consecutive equal symbols) together with j starred
/// adjacent pairs, each mixed-gender, no two sharing a seat. Matches
/// [y^0 z^j] tr(A^(2n)). Requires k >= 2, 1 <= n <= 6, 0 <= j <= n.
ExactInt pattern_oracle(int k, int n, int j);

}  // namespace menage
