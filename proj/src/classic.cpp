#include "menage/classic.hpp"

#include <stdexcept>

#include "menage/debruijn.hpp"

namespace menage {

namespace {

void check_n(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
}

// (2n/(2n-j)) * C(2n-j, j), the number of ways to pick j non-adjacent seat
// pairs on a 2n-cycle. Integral for 2n > j.
ExactRat cycle_pair_selections(int n, int j) {
    return make_rat(2 * ExactInt(n) * binomial(2 * n - j, j), 2 * ExactInt(n) - j);
}

}  // namespace

ExactInt touchard(int n) {
    check_n(n);
    if (n == 0) return 1;
    if (n == 1) return 0;
    ExactRat sum(0);
    for (int k = 0; k <= n; ++k) {
        ExactRat term = cycle_pair_selections(n, k) * ExactRat(factorial(n - k));
        if (k % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return to_integer(2 * ExactRat(factorial(n)) * sum);
}

ExactInt w_alternating(int n, int j) {
    if (n < 1 || j < 0 || j > n) throw std::invalid_argument("w_alternating: need n >= 1, 0 <= j <= n");
    return to_integer(2 * cycle_pair_selections(n, j) * ExactRat(factorial(j)) *
                      ExactRat(factorial(n - j) * factorial(n - j)));
}

ExactInt menage_inclusion_exclusion(int n) {
    check_n(n);
    if (n == 0) return 1;
    if (n == 1) return 0;
    ExactInt sum = 0;
    for (int j = 0; j <= n; ++j) {
        const ExactInt term = binomial(n, j) * w_alternating(n, j);
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

ExactInt menage_eigen_recurrence(int n) {
    check_n(n);
    if (n == 0) return 1;
    if (n == 1) return 0;
    const LaurentPoly t_minus_2 = LaurentPoly::t() - LaurentPoly::constant(2);
    LaurentPoly prev = LaurentPoly::constant(2);  // s_0
    LaurentPoly cur = t_minus_2;                  // s_1
    for (int m = 2; m <= n; ++m) {
        LaurentPoly next = t_minus_2 * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return to_integer(2 * ExactRat(factorial(n)) * laplace_at_one(cur));
}

bool laplace_identity_check(const PolyMatrix& U, const PolyMatrix& V, int n) {
    if (U.dim() != V.dim()) throw std::invalid_argument("laplace_identity_check: dimension mismatch");
    check_n(n);
    for (int i = 0; i < U.dim(); ++i)
        for (int j = 0; j < U.dim(); ++j)
            if (U.at(i, j).has_y() || U.at(i, j).has_z() || U.at(i, j).has_t() ||
                V.at(i, j).has_y() || V.at(i, j).has_z() || V.at(i, j).has_t())
                throw std::invalid_argument("laplace_identity_check: entries must be constant");

    const PolyMatrix w = U + V.scaled(LaurentPoly::z());
    const LaurentPoly trace_z = mat_pow_trace(w, static_cast<unsigned>(n));
    ExactRat lhs(0);
    for (int j = 0; j <= n; ++j) {
        ExactRat term = trace_z.coeff(0, j, 0) * ExactRat(factorial(n - j));
        if (j % 2 == 0)
            lhs += term;
        else
            lhs -= term;
    }

    const PolyMatrix x = U.scaled(LaurentPoly::t()) - V;
    const ExactRat rhs = laplace_at_one(mat_pow_trace(x, static_cast<unsigned>(n)));
    return lhs == rhs;
}

std::vector<ExactRat> menage_egf_coeffs(int N) {
    if (N < 0) throw std::invalid_argument("menage_egf_coeffs: negative order");
    const BiSeries x = BiSeries::from_poly(LaurentPoly::y(), N, 0);
    const BiSeries one_plus_x = BiSeries::from_poly(
        LaurentPoly::constant(1) + LaurentPoly::y(), N, 0);
    const BiSeries inv1px = series_inv(one_plus_x);

    // sum_k k! (x/(1+x)^2)^k, truncated: the k-th summand starts at x^k.
    const BiSeries q = x * inv1px * inv1px;
    BiSeries sum(N, 0);
    BiSeries q_pow = BiSeries::constant(ExactRat(1), N, 0);
    ExactInt kfact = 1;
    for (int k = 0; k <= N; ++k) {
        if (k > 0) {
            kfact *= k;
            q_pow = q_pow * q;
        }
        sum = sum + BiSeries::constant(ExactRat(kfact), N, 0) * q_pow;
    }

    const BiSeries one_minus_x = BiSeries::from_poly(
        LaurentPoly::constant(1) - LaurentPoly::y(), N, 0);
    const BiSeries egf = BiSeries::from_poly(
                             LaurentPoly::constant(-1) + LaurentPoly::monomial(2, 1), N, 0) +
                         BiSeries::constant(ExactRat(2), N, 0) * one_minus_x * inv1px * sum;

    std::vector<ExactRat> coeffs;
    coeffs.reserve(N + 1);
    for (int m = 0; m <= N; ++m) coeffs.push_back(egf.at(m, 0));
    return coeffs;
}

ExactInt catalan_pattern_closed_form(int n, int j) {
    if (n < 2 || j < 0 || j > n)
        throw std::invalid_argument("catalan_pattern_closed_form: need n >= 2, 0 <= j <= n");
    return to_integer(2 * cycle_pair_selections(n, j));
}

MenageUVPair::MenageUVPair() : U(4), V(4) {
    static const int u_rows[4][4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
    static const int v_rows[4][4] = {{1, 0, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            U.at(i, j) = LaurentPoly::constant(u_rows[i][j]);
            V.at(i, j) = LaurentPoly::constant(v_rows[i][j]);
        }
    // U and V are transcribed against the node order (fm, mf, mf*, fm*).
    const DeBruijnGraph g = build_graph(2);
    const PolyMatrix a = g.adjacency_in_order({"fm", "mf", "mf*", "fm*"});
    if (!(mat_mul(a, a) == U + V.scaled(LaurentPoly::z())))
        throw std::logic_error("MenageUVPair: U + V z does not equal A^2");
}

}  // namespace menage
