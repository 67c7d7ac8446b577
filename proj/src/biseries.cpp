#include "menage/biseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace menage {

BiSeries::BiSeries(int order_p, int order_t) : order_p_(order_p), order_t_(order_t) {
    if (order_p < 0 || order_t < 0)
        throw std::invalid_argument("BiSeries: negative truncation order");
    c_.assign(static_cast<std::size_t>(order_p + 1) * (order_t + 1), ExactRat(0));
}

std::size_t BiSeries::index(int i, int j) const {
    if (i < 0 || i > order_p_ || j < 0 || j > order_t_)
        throw std::out_of_range("BiSeries: coefficient index out of range");
    return static_cast<std::size_t>(i) * (order_t_ + 1) + j;
}

void BiSeries::require_same_orders(const BiSeries& a, const BiSeries& b) {
    if (a.order_p_ != b.order_p_ || a.order_t_ != b.order_t_)
        throw std::invalid_argument("BiSeries: mismatched truncation orders");
}

BiSeries BiSeries::constant(ExactRat c, int order_p, int order_t) {
    BiSeries s(order_p, order_t);
    s.c_[0] = std::move(c);
    return s;
}

BiSeries BiSeries::from_poly(const LaurentPoly& poly, int order_p, int order_t) {
    BiSeries s(order_p, order_t);
    for (const Term& term : poly.terms()) {
        if (term.mono.ey < 0)
            throw std::invalid_argument("BiSeries::from_poly: negative p exponent");
        if (term.mono.ez != 0)
            throw std::invalid_argument("BiSeries::from_poly: unexpected z variable");
        if (term.mono.ey > order_p || term.mono.et > order_t) continue;
        s.c_[s.index(term.mono.ey, term.mono.et)] = term.coeff;
    }
    return s;
}

LaurentPoly BiSeries::coeff_p(int i) const {
    std::vector<Term> terms;
    for (int j = 0; j <= order_t_; ++j) {
        const ExactRat& c = at(i, j);
        if (c != 0) terms.push_back(Term{Monomial{0, 0, j}, c});
    }
    return LaurentPoly::from_terms(std::move(terms));
}

bool BiSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const ExactRat& c) { return c == 0; });
}

BiSeries BiSeries::operator-() const {
    BiSeries s(order_p_, order_t_);
    for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i] = -c_[i];
    return s;
}

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    BiSeries::require_same_orders(a, b);
    BiSeries s(a.order_p_, a.order_t_);
    for (std::size_t i = 0; i < s.c_.size(); ++i) s.c_[i] = a.c_[i] + b.c_[i];
    return s;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) {
    BiSeries::require_same_orders(a, b);
    BiSeries s(a.order_p_, a.order_t_);
    for (std::size_t i = 0; i < s.c_.size(); ++i) s.c_[i] = a.c_[i] - b.c_[i];
    return s;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    BiSeries::require_same_orders(a, b);
    BiSeries s(a.order_p_, a.order_t_);
    ExactRat tmp;
    for (int i = 0; i <= a.order_p_; ++i)
        for (int j = 0; j <= a.order_t_; ++j) {
            const ExactRat& x = a.at(i, j);
            if (x == 0) continue;
            for (int k = 0; i + k <= a.order_p_; ++k)
                for (int l = 0; j + l <= a.order_t_; ++l) {
                    const ExactRat& y = b.at(k, l);
                    if (y == 0) continue;
                    tmp = x * y;
                    s.c_[s.index(i + k, j + l)] += tmp;
                }
        }
    return s;
}

bool operator==(const BiSeries& a, const BiSeries& b) {
    return a.order_p_ == b.order_p_ && a.order_t_ == b.order_t_ && a.c_ == b.c_;
}

namespace {

// Newton steps needed so that the error ideal (p,t)^(2^steps) vanishes
// modulo (p^(op+1), t^(ot+1)): any monomial of total degree > op+ot does.
int newton_steps(int order_p, int order_t) {
    int target = order_p + order_t + 1;
    int steps = 0;
    for (int reach = 1; reach < target; reach *= 2) ++steps;
    return steps;
}

}  // namespace

BiSeries series_inv(const BiSeries& s) {
    if (s.at(0, 0) == 0) throw std::domain_error("series_inv: not invertible");
    const int op = s.order_p(), ot = s.order_t();
    BiSeries u = BiSeries::constant(ExactRat(1) / s.at(0, 0), op, ot);
    const BiSeries two = BiSeries::constant(ExactRat(2), op, ot);
    for (int step = newton_steps(op, ot); step > 0; --step) u = u * (two - s * u);
    return u;
}

BiSeries series_sqrt(const BiSeries& s) {
    if (s.at(0, 0) != 1) throw std::domain_error("series_sqrt: constant term must be 1");
    const int op = s.order_p(), ot = s.order_t();
    BiSeries r = BiSeries::constant(ExactRat(1), op, ot);
    const ExactRat half(1, 2);
    for (int step = newton_steps(op, ot); step > 0; --step) {
        BiSeries next = r + s * series_inv(r);
        for (int i = 0; i <= op; ++i)
            for (int j = 0; j <= ot; ++j) next.set(i, j, next.at(i, j) * half);
        r = next;
    }
    return r;
}

}  // namespace menage
