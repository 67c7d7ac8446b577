#include "menage/transfer.hpp"

#include <stdexcept>

namespace menage {

namespace {

void check_kn(int k, int n) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
}

std::vector<ExactInt> counts_from_trace(const LaurentPoly& trace, int n) {
    std::vector<ExactInt> counts;
    counts.reserve(n + 1);
    for (int j = 0; j <= n; ++j) counts.push_back(to_integer(trace.coeff(0, j, 0)));
    return counts;
}

}  // namespace

std::vector<ExactInt> pattern_counts(int k, int n) {
    check_kn(k, n);
    if (n < 1) throw std::invalid_argument("pattern_counts: n must be at least 1");
    const DeBruijnGraph g = build_graph(k);
    PolyCaps caps;
    caps.max_ez = n;
    const LaurentPoly trace = mat_pow_trace(g.adjacency, 2 * static_cast<unsigned>(n), caps);
    return counts_from_trace(trace, n);
}

ExactInt pattern_count(int k, int n, int j) {
    if (j < 0 || j > n) throw std::invalid_argument("pattern_count: need 0 <= j <= n");
    return pattern_counts(k, n)[j];
}

ExactInt combine_pattern_counts(int n, const std::vector<ExactInt>& counts) {
    if (static_cast<int>(counts.size()) < n + 1)
        throw std::invalid_argument("combine_pattern_counts: need counts for j = 0..n");
    ExactInt sum = 0;
    for (int j = 0; j <= n; ++j) {
        const ExactInt term = factorial(n - j) * counts[j];
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return factorial(n) * sum;
}

ExactInt seatings_via_transfer(int k, int n) {
    check_kn(k, n);
    if (n == 0) return 1;
    if (n == 1) return 0;
    return combine_pattern_counts(n, pattern_counts(k, n));
}

TransferSweep::TransferSweep(int k, int n_max) : n_max_(n_max) {
    check_kn(k, n_max);
    caps_.max_ez = n_max;
    const DeBruijnGraph g = build_graph(k);
    squared_ = mat_mul(g.adjacency, g.adjacency, caps_);
}

ExactInt TransferSweep::next() {
    const int n = n_next_;
    if (n > n_max_) throw std::logic_error("TransferSweep: past n_max");
    ++n_next_;
    if (n == 0) return 1;
    if (n == 1) {
        power_ = squared_;
        return 0;
    }
    power_ = mat_mul(power_, squared_, caps_);
    return combine_pattern_counts(n, counts_from_trace(power_.trace(), n));
}

std::vector<ExactInt> seatings_sweep(int k, int n_max) {
    TransferSweep sweep(k, n_max);
    std::vector<ExactInt> out;
    out.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) out.push_back(sweep.next());
    return out;
}

}  // namespace menage
