#pragma once

#include <vector>

#include "menage/biseries.hpp"
#include "menage/exact.hpp"
#include "menage/polymatrix.hpp"

namespace menage {

/// Touchard's closed form for the number M_n of seatings of n couples with
/// alternating genders and no adjacent spouses. M_0 = 1 and M_1 = 0 by
/// convention. Throws std::invalid_argument for negative n.
ExactInt touchard(int n);

/// Number of alternating seatings of n couples in which j designated
/// couples sit together. Requires n >= 1 and 0 <= j <= n.
ExactInt w_alternating(int n, int j);

/// M_n by inclusion-exclusion over the number of close couples. Agrees with
/// touchard everywhere; same conventions for n = 0, 1.
ExactInt menage_inclusion_exclusion(int n);

/// M_n through the eigenvalues of U*t - V: the conjugate power sum
/// s_n(t) = lam+^n + lam-^n satisfies s_0 = 2, s_1 = t - 2,
/// s_m = (t-2) s_{m-1} - s_{m-2}, and M_n = 2 n! L[s_n] where L replaces
/// t^k with k!. Same conventions for n = 0, 1.
ExactInt menage_eigen_recurrence(int n);

/// Checks, for constant square matrices U and V of equal dimension, that
///   sum_j (-1)^j (n-j)! [z^j] tr((U + V z)^n)  ==  L[tr((U t - V)^n)].
/// Throws std::invalid_argument if the entries involve y, z or t, or on
/// dimension mismatch.
bool laplace_identity_check(const PolyMatrix& U, const PolyMatrix& V, int n);

/// First N+1 coefficients of the exponential generating function
/// sum_n M_n x^n / n!, computed from the series
/// -1 + 2x + 2 (1-x)/(1+x) sum_k k! x^k / (1+x)^(2k).
std::vector<ExactRat> menage_egf_coeffs(int N);

/// Closed form 2 * (2n/(2n-j)) * C(2n-j, j) for the balanced pattern count
/// [y^0 z^j] tr(A^(2n)) of the k = 2 graph. Requires n >= 2, 0 <= j <= n.
ExactInt catalan_pattern_closed_form(int n, int j);

// The constant 4x4 pair with A^2 = U + V z for the k = 2 graph's adjacency
// matrix A; that identity is verified at construction.
struct MenageUVPair {
    PolyMatrix U;
    PolyMatrix V;

    MenageUVPair();
};

}  // namespace menage
