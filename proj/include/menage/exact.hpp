#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace menage {

// All counting is exact: arbitrary-precision integers and rationals
// backed by GMP. Rationals are kept canonical by GMP (reduced, positive
// denominator); helpers below assert integrality where callers rely on it.
using ExactInt = mpz_class;
using ExactRat = mpq_class;

/// n! as an exact integer. Requires n >= 0.
ExactInt factorial(long n);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n. Requires n >= 0.
ExactInt binomial(long n, long k);

/// True iff b != 0 and b divides a.
bool divisible(const ExactInt& a, const ExactInt& b);

/// Exact quotient a / b. Throws std::domain_error unless b | a.
ExactInt div_exact(const ExactInt& a, const ExactInt& b);

inline bool is_integral(const ExactRat& q) { return q.get_den() == 1; }

/// Numerator of an integral rational. Throws std::domain_error otherwise.
ExactInt to_integer(const ExactRat& q);

/// Canonical rational num/den. Throws std::domain_error when den == 0.
ExactRat make_rat(const ExactInt& num, const ExactInt& den);

inline std::string to_string(const ExactInt& v) { return v.get_str(); }
inline std::string to_string(const ExactRat& q) { return q.get_str(); }

}  // namespace menage
