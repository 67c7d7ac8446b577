#pragma once

#include <vector>

#include "menage/exact.hpp"
#include "menage/laurent.hpp"

namespace menage {

// Dense bivariate power series in (p, t), truncated at fixed orders: all
// arithmetic is performed modulo p^(order_p+1) and t^(order_t+1). Binary
// operations require identical truncation orders on both operands.
class BiSeries {
  public:
    BiSeries(int order_p, int order_t);

    static BiSeries constant(ExactRat c, int order_p, int order_t);

    /// Reads a LaurentPoly whose y slot plays the role of p (so exponents
    /// must be nonnegative) and which has no z part; terms above the
    /// truncation orders are dropped.
    static BiSeries from_poly(const LaurentPoly& poly, int order_p, int order_t);

    int order_p() const { return order_p_; }
    int order_t() const { return order_t_; }

    const ExactRat& at(int i, int j) const { return c_[index(i, j)]; }
    void set(int i, int j, ExactRat v) { c_[index(i, j)] = std::move(v); }

    /// Coefficient of p^i as a polynomial in t.
    LaurentPoly coeff_p(int i) const;

    bool is_zero() const;

    BiSeries operator-() const;
    friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    friend bool operator==(const BiSeries& a, const BiSeries& b);

  private:
    std::size_t index(int i, int j) const;
    static void require_same_orders(const BiSeries& a, const BiSeries& b);

    int order_p_;
    int order_t_;
    std::vector<ExactRat> c_;  // (order_p+1) x (order_t+1), row = p power
};

/// Multiplicative inverse modulo the truncation orders, by Newton iteration.
/// Throws std::domain_error ("not invertible") when s(0,0) == 0.
BiSeries series_inv(const BiSeries& s);

/// Square root r with r(0,0) = 1 and r*r = s modulo the truncation orders,
/// by Newton iteration. Throws std::domain_error unless s(0,0) == 1.
BiSeries series_sqrt(const BiSeries& s);

}  // namespace menage
