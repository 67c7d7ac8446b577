#include "menage/ternary.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "menage/debruijn.hpp"
#include "menage/transfer.hpp"

namespace menage {

namespace {

// Node order used by the explicit B2 transcription.
const std::vector<std::string> kB2Order = {"fm*", "mf", "ff", "mm", "fm", "mf*"};

PolyMatrix b2_explicit() {
    static const std::array<std::array<const char*, 6>, 6> rows = {{
        {"-y", "y*t", "t", "0", "y*t", "-y"},
        {"-y", "y*t - y", "0", "y^2*t - y^2", "y*t", "-y"},
        {"0", "y*t - y", "0", "y^2*t - y^2", "0", "-y"},
        {"-y", "0", "t - 1", "0", "y*t - y", "0"},
        {"-y", "y*t", "t - 1", "0", "y*t - y", "-y"},
        {"-y", "y*t", "0", "y^2*t", "y*t", "-y"},
    }};
    PolyMatrix m(6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m.at(i, j) = LaurentPoly::parse(rows[i][j]);
    return m;
}

void check_n(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
}

ExactInt laplace_count(int n, const LaurentPoly& t_poly) {
    return to_integer(ExactRat(factorial(n)) * laplace_at_one(t_poly));
}

std::vector<ExactRat> trimmed(std::vector<ExactRat> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

int valuation(const std::vector<ExactRat>& v) {  // -1 for the zero polynomial
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return static_cast<int>(i);
    return -1;
}

std::vector<ExactRat> convolve(const std::vector<ExactRat>& a, const std::vector<ExactRat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<ExactRat> out(a.size() + b.size() - 1, ExactRat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

BiSeries from_vec(const std::vector<ExactRat>& v, int shift, int order_p) {
    BiSeries s(order_p, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const int e = static_cast<int>(i) - shift;
        if (e < 0) {
            if (v[i] != 0) throw std::logic_error("from_vec: negative exponent");
            continue;
        }
        if (e <= order_p) s.set(e, 0, v[i]);
    }
    return s;
}

}  // namespace

PolyMatrix ternary_b2_derived() {
    const DeBruijnGraph g = build_graph(3);
    const PolyMatrix yb = g.adjacency.scaled(LaurentPoly::y());
    const PolyMatrix sq = mat_mul(yb, yb);

    PolyMatrix result(6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const LaurentPoly& entry = sq.at(i, j);
            if (entry.max_ez() > 1)
                throw std::logic_error("ternary_b2_derived: (yB)^2 has z-degree above 1");
            const LaurentPoly u = entry.coeff_of_z(0);
            const LaurentPoly v = entry.coeff_of_z(1);
            result.at(i, j) = (u * LaurentPoly::t() - v).with_y_exponents_halved();
        }

    std::vector<int> perm;
    for (const std::string& label : kB2Order) perm.push_back(g.node_index(label));
    return result.permuted(perm);
}

const PolyMatrix& ternary_b2() {
    static const PolyMatrix b2 = [] {
        PolyMatrix m = b2_explicit();
        if (!(m == ternary_b2_derived()))
            throw std::logic_error("ternary_b2: transcription disagrees with the graph derivation");
        return m;
    }();
    return b2;
}

LaurentPoly b2_trace_y_coeff(int n) {
    if (n < 1) throw std::invalid_argument("b2_trace_y_coeff: n must be at least 1");
    PolyCaps caps;
    caps.max_ey = n;  // sound: B2 has no negative y exponents
    const LaurentPoly trace = mat_pow_trace(ternary_b2(), static_cast<unsigned>(n), caps);
    return trace.coeff_of_y(n);
}

ExactInt ternary_via_b2(int n) {
    check_n(n);
    if (n == 0) return 1;
    if (n == 1) return 0;
    return laplace_count(n, b2_trace_y_coeff(n));
}

const ABCDPolys& ternary_abcd() {
    static const ABCDPolys polys = [] {
        ABCDPolys p;
        p.a = LaurentPoly::parse(
            "-2*y^5*t^3 + 2*y^4*t^4 + 4*y^5*t^2 - 8*y^4*t^3 - 2*y^5*t + 12*y^4*t^2"
            " - 8*y^4*t + 6*y^3*t - 4*y^2*t^2 + 16*y^2 - 10*y*t + 20*y + 6");
        const LaurentPoly neg_p2t = LaurentPoly::parse("-y^2*t");
        const LaurentPoly two_plus_p_minus_t = LaurentPoly::parse("2 + y - t");
        p.b = neg_p2t * two_plus_p_minus_t * LaurentPoly::parse("y - 3*t + 6");
        p.c = LaurentPoly::parse(
            "y^6*t^2 - 2*y^5*t^3 + y^4*t^4 + 4*y^5*t^2 - 4*y^4*t^3 - 2*y^5*t + 6*y^4*t^2"
            " - 4*y^4*t + 2*y^3*t - y^2*t^2 + 4*y^2 - 2*y*t + 4*y + 1");
        p.d = neg_p2t * two_plus_p_minus_t * two_plus_p_minus_t;
        if (!(p.c.coeff_of_y(0) == LaurentPoly::constant(1)))
            throw std::logic_error("ternary_abcd: c must have p-constant coefficient 1");
        return p;
    }();
    return polys;
}

BiSeries diagonal_series(int order_p, int order_t) {
    const ABCDPolys& polys = ternary_abcd();
    const BiSeries a = BiSeries::from_poly(polys.a, order_p, order_t);
    const BiSeries c = BiSeries::from_poly(polys.c, order_p, order_t);
    const BiSeries d = BiSeries::from_poly(polys.d, order_p, order_t);

    // b/d in the cancelled form (p - 3t + 6) / (2 + p - t); d itself has a
    // p^2 t factor and no series inverse.
    const BiSeries g = BiSeries::from_poly(LaurentPoly::parse("y - 3*t + 6"), order_p, order_t) *
                       series_inv(BiSeries::from_poly(LaurentPoly::parse("2 + y - t"), order_p,
                                                      order_t));

    const BiSeries four_p2 =
        BiSeries::from_poly(LaurentPoly::monomial(4, 2), order_p, order_t);
    const BiSeries root = series_sqrt(c * c - four_p2 * d * d);
    return (a - g * c) * series_inv(root) + g;
}

LaurentPoly diagonal_coefficient(int n) {
    check_n(n);
    const LaurentPoly coeff = diagonal_series(n, n).coeff_p(n);
    if (!coeff.all_integral())
        throw std::logic_error("diagonal_coefficient: non-integral coefficient, truncation bug");
    return coeff;
}

ExactInt ternary_via_diagonal(int n) {
    check_n(n);
    if (n == 0) return 1;
    if (n == 1) return 0;
    return laplace_count(n, diagonal_coefficient(n));
}

ExactRat diagonal_extraction(const std::vector<ExactRat>& a, const std::vector<ExactRat>& b,
                             const std::vector<ExactRat>& c, const std::vector<ExactRat>& d,
                             int n) {
    check_n(n);
    if (c.empty() || c[0] != 1)
        throw std::invalid_argument("diagonal_extraction: c must have constant term 1");
    const std::vector<ExactRat> dt = trimmed(d);
    if (dt.empty()) throw std::invalid_argument("diagonal_extraction: d must be nonzero");
    const int u = valuation(dt);

    const std::vector<ExactRat> numer = trimmed([&] {
        std::vector<ExactRat> ad = convolve(a, dt);
        const std::vector<ExactRat> bc = convolve(b, c);
        ad.resize(std::max(ad.size(), bc.size()), ExactRat(0));
        for (std::size_t i = 0; i < bc.size(); ++i) ad[i] -= bc[i];
        return ad;
    }());

    const int val_b = valuation(trimmed(b));
    if (val_b >= 0 && val_b < u)
        throw std::invalid_argument("diagonal_extraction: b/d is not a power series");
    const int val_numer = valuation(numer);
    if (val_numer >= 0 && val_numer < u)
        throw std::invalid_argument("diagonal_extraction: (a d - b c)/d is not a power series");

    const BiSeries d_inv = series_inv(from_vec(dt, u, n));
    const BiSeries g = from_vec(trimmed(b), u, n) * d_inv;
    const BiSeries h = from_vec(numer, u, n) * d_inv;

    const BiSeries c_s = from_vec(c, 0, n);
    const BiSeries d_s = from_vec(dt, 0, n);
    const BiSeries four_p2 = BiSeries::from_poly(LaurentPoly::monomial(4, 2), n, 0);
    const BiSeries root = series_sqrt(c_s * c_s - four_p2 * d_s * d_s);
    return (h * series_inv(root) + g).at(n, 0);
}

std::vector<ExactRat> ternary_egf_rational_term(int N) {
    if (N < 0) throw std::invalid_argument("ternary_egf_rational_term: negative order");

    // Path 1: expand g(x, t) bivariately and weight the t^k coefficient by k!.
    const BiSeries g =
        BiSeries::from_poly(LaurentPoly::parse("y - 3*t + 6"), N, N) *
        series_inv(BiSeries::from_poly(LaurentPoly::parse("2 + y - t"), N, N));
    std::vector<ExactRat> direct(N + 1, ExactRat(0));
    {
        ExactInt kfact = 1;
        for (int k = 0; k <= N; ++k) {
            if (k > 0) kfact *= k;
            for (int m = 0; m <= N; ++m) direct[m] += ExactRat(kfact) * g.at(m, k);
        }
    }

    // Path 2: 3 - (2x/(2+x)) sum_{k<=N} k!/(2+x)^k via univariate series.
    const BiSeries inv_2px = series_inv(BiSeries::from_poly(LaurentPoly::parse("2 + y"), N, 0));
    BiSeries sum(N, 0);
    BiSeries pow = BiSeries::constant(ExactRat(1), N, 0);
    ExactInt kfact = 1;
    for (int k = 0; k <= N; ++k) {
        if (k > 0) {
            kfact *= k;
            pow = pow * inv_2px;
        }
        sum = sum + BiSeries::constant(ExactRat(kfact), N, 0) * pow;
    }
    const BiSeries closed = BiSeries::constant(ExactRat(3), N, 0) -
                            BiSeries::from_poly(LaurentPoly::monomial(2, 1), N, 0) * inv_2px * sum;

    for (int m = 0; m <= N; ++m)
        if (direct[m] != closed.at(m, 0))
            throw std::logic_error("ternary_egf_rational_term: computation paths disagree");
    return direct;
}

}  // namespace menage
