#pragma once

#include <vector>

#include "menage/debruijn.hpp"
#include "menage/exact.hpp"

namespace menage {

/// [y^0 z^j] tr(A_k^(2n)) for the run-length-k graph: the number of rooted
/// cyclic gender/star patterns of length 2n with balanced genders and j
/// close couples. Requires k >= 2, n >= 1, 0 <= j <= n.
ExactInt pattern_count(int k, int n, int j);

/// All pattern counts for j = 0..n from a single matrix power.
std::vector<ExactInt> pattern_counts(int k, int n);

/// Exact number of seating arrangements of n couples around 2n labeled
/// seats with no adjacent spouses and no k consecutive same-gender people.
/// n = 0 gives 1 and n = 1 gives 0 by convention. Requires k >= 2, n >= 0.
ExactInt seatings_via_transfer(int k, int n);

// Incremental generator of seating counts for n = 0, 1, 2, ...: keeps the
// running power A^(2n) and advances it by one squared-adjacency factor per
// term, which is far cheaper than independent powers when a whole range is
// wanted. Results are identical to seatings_via_transfer.
class TransferSweep {
  public:
    /// n_max bounds how many terms may be drawn (z degrees above n_max are
    /// discarded while multiplying, so later terms would be wrong).
    TransferSweep(int k, int n_max);

    /// Returns the count for the next n, starting at n = 0.
    ExactInt next();

    int current_n() const { return n_next_ - 1; }

  private:
    int n_max_;
    int n_next_ = 0;
    PolyCaps caps_;
    PolyMatrix squared_{1};
    PolyMatrix power_{1};  // squared_^n for the last emitted n >= 1
};

/// Seating counts for n = 0..n_max as one incremental sweep.
std::vector<ExactInt> seatings_sweep(int k, int n_max);

/// n! * sum_j (-1)^j (n-j)! c_j — the inclusion-exclusion weights that turn
/// pattern counts into seating counts. Exposed for reuse by the k = 3 paths.
ExactInt combine_pattern_counts(int n, const std::vector<ExactInt>& counts);

}  // namespace menage
