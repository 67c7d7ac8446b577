#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "menage/exact.hpp"

namespace menage {

// Exponent triple of one monomial y^ey * z^ez * t^et. The y exponent is
// signed (the transfer matrices contain y^-1); z and t are never negative.
struct Monomial {
    std::int32_t ey = 0;
    std::int32_t ez = 0;
    std::int32_t et = 0;

    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
    friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct Term {
    Monomial mono;
    ExactRat coeff;
};

// Degree caps applied during multiplication: product terms whose exponent
// exceeds a cap are discarded. Capping y is only sound when both operands
// have no negative y exponents (enforced); z and t are always nonnegative.
struct PolyCaps {
    std::int32_t max_ey = std::numeric_limits<std::int32_t>::max();
    std::int32_t max_ez = std::numeric_limits<std::int32_t>::max();
    std::int32_t max_et = std::numeric_limits<std::int32_t>::max();

    bool any() const {
        return max_ey != std::numeric_limits<std::int32_t>::max() ||
               max_ez != std::numeric_limits<std::int32_t>::max() ||
               max_et != std::numeric_limits<std::int32_t>::max();
    }
    bool admits(const Monomial& m) const {
        return m.ey <= max_ey && m.ez <= max_ez && m.et <= max_et;
    }
};

// Sparse multivariate Laurent polynomial over ExactRat in y (signed
// exponents), z and t (nonnegative exponents). Canonical form: terms sorted
// by (ey, ez, et), no zero coefficients stored. Immutable value semantics;
// two equal polynomials have identical term vectors.
class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly constant(ExactRat c);
    static LaurentPoly constant(long c) { return constant(ExactRat(c)); }
    static LaurentPoly monomial(ExactRat coeff, std::int32_t ey, std::int32_t ez = 0,
                                std::int32_t et = 0);
    static LaurentPoly y(std::int32_t e = 1) { return monomial(1, e, 0, 0); }
    static LaurentPoly z(std::int32_t e = 1) { return monomial(1, 0, e, 0); }
    static LaurentPoly t(std::int32_t e = 1) { return monomial(1, 0, 0, e); }

    /// Builds canonical form from an arbitrary term list (merges, drops zeros).
    static LaurentPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of y^ey z^ez t^et (zero if absent).
    ExactRat coeff(std::int32_t ey, std::int32_t ez, std::int32_t et) const;

    /// Coefficient of y^ey z^ez as a polynomial in t alone.
    LaurentPoly coeff_of_yz(std::int32_t ey, std::int32_t ez) const;

    /// Coefficient of z^ez as a polynomial in y and t.
    LaurentPoly coeff_of_z(std::int32_t ez) const;

    /// Coefficient of y^ey as a polynomial in z and t.
    LaurentPoly coeff_of_y(std::int32_t ey) const;

    bool has_y() const;
    bool has_z() const;
    bool has_t() const;

    std::int32_t min_ey() const;  // 0 for the zero polynomial
    std::int32_t max_ey() const;
    std::int32_t max_ez() const;
    std::int32_t max_et() const;

    /// True iff every coefficient has denominator 1.
    bool all_integral() const;

    /// Replaces y^(2e) with y^e in every term. Throws unless all y exponents
    /// are even.
    LaurentPoly with_y_exponents_halved() const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        return true;
    }

    /// Product with degree caps (see PolyCaps).
    friend LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b, const PolyCaps& caps);

    /// Text form, terms in canonical order: `-2*y^-1*z + 3*t^2`.
    std::string to_string() const;

    /// Inverse of to_string. Throws std::invalid_argument on malformed input.
    static LaurentPoly parse(std::string_view text);

  private:
    std::vector<Term> terms_;
};

inline LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }

/// Applies t^k -> k! to a polynomial in t alone and sums the results, i.e.
/// evaluates the series Laplace transform at 1. Throws std::invalid_argument
/// if the input involves y or z.
ExactRat laplace_at_one(const LaurentPoly& f);

}  // namespace menage
