#include "menage/exact.hpp"

namespace menage {

ExactInt factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

ExactInt binomial(long n, long k) {
    if (n < 0) throw std::domain_error("binomial: negative n");
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

bool divisible(const ExactInt& a, const ExactInt& b) {
    if (b == 0) return false;
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

ExactInt div_exact(const ExactInt& a, const ExactInt& b) {
    if (!divisible(a, b))
        throw std::domain_error("div_exact: " + a.get_str() + " not divisible by " + b.get_str());
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

ExactInt to_integer(const ExactRat& q) {
    if (!is_integral(q)) throw std::domain_error("to_integer: " + q.get_str() + " is not integral");
    return q.get_num();
}

ExactRat make_rat(const ExactInt& num, const ExactInt& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    ExactRat q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace menage
