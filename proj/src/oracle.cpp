#include "menage/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace menage {

namespace {

// People are 0..2n-1: females below n, males from n; spouse of p is p +- n.
struct SeatingSearch {
    int k;
    int n;
    int seats;
    std::vector<int> seat;
    std::vector<bool> used;
    long count = 0;

    bool gender(int person) const { return person >= n; }

    bool run_too_long(int last) const {
        // k same-gender people ending at seat `last` (no wrap during search).
        if (last < k - 1) return false;
        const bool g = gender(seat[last]);
        for (int s = last - k + 1; s < last; ++s)
            if (gender(seat[s]) != g) return false;
        return true;
    }

    bool wrap_ok() const {
        if (seat[seats - 1] % n == seat[0] % n) return false;  // spouses across the seam
        for (int start = 0; start < seats; ++start) {          // every cyclic k-window
            const bool g = gender(seat[start]);
            bool same = true;
            for (int off = 1; off < k && same; ++off)
                same = gender(seat[(start + off) % seats]) == g;
            if (same) return false;
        }
        return true;
    }

    void place(int s) {
        if (s == seats) {
            if (wrap_ok()) ++count;
            return;
        }
        for (int person = 0; person < seats; ++person) {
            if (used[person]) continue;
            if (s > 0 && person % n == seat[s - 1] % n) continue;  // adjacent spouses
            seat[s] = person;
            if (s == 0 || !run_too_long(s)) {
                used[person] = true;
                place(s + 1);
                used[person] = false;
            }
        }
    }
};

}  // namespace

ExactInt brute_force(int k, int n) {
    if (k < 2) throw std::invalid_argument("brute_force: k must be at least 2");
    if (n < 1 || n > 5) throw std::invalid_argument("brute_force: supported range is 1 <= n <= 5");
    SeatingSearch search{k, n, 2 * n, std::vector<int>(2 * n, -1),
                         std::vector<bool>(2 * n, false)};
    search.place(0);
    return ExactInt(search.count);
}

ExactInt pattern_oracle(int k, int n, int j) {
    if (k < 2) throw std::invalid_argument("pattern_oracle: k must be at least 2");
    if (n < 1 || n > 6) throw std::invalid_argument("pattern_oracle: supported range is 1 <= n <= 6");
    if (j < 0 || j > n) throw std::invalid_argument("pattern_oracle: need 0 <= j <= n");

    const int len = 2 * n;
    long total = 0;
    for (unsigned word = 0; word < (1u << len); ++word) {
        if (__builtin_popcount(word) != n) continue;  // males = females

        bool run = false;
        for (int s = 0; s < len && !run; ++s) {
            bool same = true;
            for (int off = 1; off < k && same; ++off)
                same = ((word >> ((s + off) % len)) & 1u) == ((word >> (s % len)) & 1u);
            run = same;
        }
        if (run) continue;

        // Pair position p covers seats p and p+1; starred pairs must be
        // mixed-gender and no two may share a seat (cyclically adjacent
        // positions conflict).
        std::vector<int> mixed;
        for (int p = 0; p < len; ++p)
            if (((word >> p) & 1u) != ((word >> ((p + 1) % len)) & 1u)) mixed.push_back(p);

        // DFS over j-subsets of mixed positions without cyclic neighbors.
        std::vector<int> chosen;
        auto count_sets = [&](auto&& self, std::size_t from, int remaining) -> long {
            if (remaining == 0) return 1;
            long acc = 0;
            for (std::size_t i = from; i < mixed.size(); ++i) {
                bool clash = false;
                for (int c : chosen) {
                    const int diff = (mixed[i] - c + len) % len;
                    if (diff == 1 || diff == len - 1) clash = true;
                }
                if (clash) continue;
                chosen.push_back(mixed[i]);
                acc += self(self, i + 1, remaining - 1);
                chosen.pop_back();
            }
            return acc;
        };
        total += count_sets(count_sets, 0, j);
    }
    return ExactInt(total);
}

}  // namespace menage
