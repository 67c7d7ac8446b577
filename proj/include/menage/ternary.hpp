#pragma once

#include <vector>

#include "menage/biseries.hpp"
#include "menage/exact.hpp"
#include "menage/polymatrix.hpp"

namespace menage {

/// The 6x6 matrix B2 in y and t whose trace carries the k = 3 seating
/// counts: T_n = n! L[[y^n] tr(B2^n)]. The returned matrix is the explicit
/// transcription; on first use it is checked against an independent
/// derivation from the k = 3 graph (see ternary_b2_derived) and a mismatch
/// throws std::logic_error.
const PolyMatrix& ternary_b2();

/// B2 rebuilt from the graph: (yB)^2 splits as U + V z with z-degree 1,
/// B2 = U t - V with y^2 renamed y. Returned in the same node order as
/// ternary_b2 for direct comparison.
PolyMatrix ternary_b2_derived();

/// [y^n] tr(B2^n) as a polynomial in t (degree <= n).
LaurentPoly b2_trace_y_coeff(int n);

/// T_n via the B2 matrix power route. T_0 = 1, T_1 = 0 by convention.
ExactInt ternary_via_b2(int n);

// The four polynomials of the rational generating function
// sum_n tr(B2^n) x^n = (a + b (x + x y^2)) / (c + d (x + x y^2)) evaluated
// at p = x y. Stored with p in the LaurentPoly y slot. Invariants: the
// p-constant coefficient of c is 1; b/d cancels to (p - 3t + 6)/(2 + p - t).
struct ABCDPolys {
    LaurentPoly a, b, c, d;
};

const ABCDPolys& ternary_abcd();

/// The full diagonal expression (a - (b/d) c) / sqrt(c^2 - 4 p^2 d^2) + b/d
/// as a truncated series; its p^n coefficient is [y^n] tr(B2^n) whenever
/// order_t >= n.
BiSeries diagonal_series(int order_p, int order_t);

/// [p^n] of the diagonal expression as a polynomial in t, computed at
/// truncation orders (n, n). Throws std::logic_error if any coefficient
/// fails to reduce to an integer (a truncation-order bug).
LaurentPoly diagonal_coefficient(int n);

/// T_n via the diagonal route. Same conventions as ternary_via_b2.
ExactInt ternary_via_diagonal(int n);

/// Generic diagonal extraction for univariate a, b, c, d over ExactRat
/// (dense coefficient vectors in p): returns
///   [p^n] ( (a d - b c) / (d sqrt(c^2 - 4 p^2 d^2)) + b/d ).
/// Requires c(0) = 1 and that b/d and (a d - b c)/d expand as power series
/// (d's low-order zeros must cancel); otherwise throws.
ExactRat diagonal_extraction(const std::vector<ExactRat>& a, const std::vector<ExactRat>& b,
                             const std::vector<ExactRat>& c, const std::vector<ExactRat>& d,
                             int n);

/// First N+1 x-coefficients of L_t applied termwise to
/// g(x, t) = (x - 3t + 6)/(x - t + 2), with the t-truncation at order N:
/// each coefficient is the partial sum over k <= N of k! times the t^k
/// coefficient. Computed two independent ways (bivariate expansion of g;
/// the closed form 3 - (2x/(2+x)) sum_k k!/(2+x)^k); throws
/// std::logic_error if the two disagree.
std::vector<ExactRat> ternary_egf_rational_term(int N);

}  // namespace menage
