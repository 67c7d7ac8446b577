#include "menage/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>
#include <utility>

namespace menage {

namespace {

// Two-pointer merge of canonical term vectors, consuming both.
std::vector<Term> merge_terms(std::vector<Term> a, std::vector<Term> b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].mono < b[j].mono) {
            out.push_back(std::move(a[i++]));
        } else if (b[j].mono < a[i].mono) {
            out.push_back(std::move(b[j++]));
        } else {
            ExactRat c = a[i].coeff + b[j].coeff;
            if (c != 0) out.push_back(Term{a[i].mono, std::move(c)});
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
    for (; j < b.size(); ++j) out.push_back(std::move(b[j]));
    return out;
}

std::vector<Term> canonicalize(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.mono < y.mono; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
            if (out.back().coeff == 0) out.pop_back();
        } else if (t.coeff != 0) {
            out.push_back(std::move(t));
        }
    }
    return out;
}

constexpr std::size_t kFoldThreshold = 16;

}  // namespace

LaurentPoly LaurentPoly::constant(ExactRat c) {
    LaurentPoly p;
    if (c != 0) p.terms_.push_back(Term{Monomial{}, std::move(c)});
    return p;
}

LaurentPoly LaurentPoly::monomial(ExactRat coeff, std::int32_t ey, std::int32_t ez,
                                  std::int32_t et) {
    if (ez < 0 || et < 0) throw std::invalid_argument("LaurentPoly: negative z or t exponent");
    LaurentPoly p;
    if (coeff != 0) p.terms_.push_back(Term{Monomial{ey, ez, et}, std::move(coeff)});
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    for (const Term& t : terms)
        if (t.mono.ez < 0 || t.mono.et < 0)
            throw std::invalid_argument("LaurentPoly: negative z or t exponent");
    LaurentPoly p;
    p.terms_ = canonicalize(std::move(terms));
    return p;
}

ExactRat LaurentPoly::coeff(std::int32_t ey, std::int32_t ez, std::int32_t et) const {
    const Monomial key{ey, ez, et};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, const Monomial& m) { return t.mono < m; });
    if (it != terms_.end() && it->mono == key) return it->coeff;
    return ExactRat(0);
}

LaurentPoly LaurentPoly::coeff_of_yz(std::int32_t ey, std::int32_t ez) const {
    LaurentPoly out;
    for (const Term& t : terms_)
        if (t.mono.ey == ey && t.mono.ez == ez)
            out.terms_.push_back(Term{Monomial{0, 0, t.mono.et}, t.coeff});
    return out;  // order preserved: t ascending within fixed (ey, ez)
}

LaurentPoly LaurentPoly::coeff_of_z(std::int32_t ez) const {
    std::vector<Term> picked;
    for (const Term& t : terms_)
        if (t.mono.ez == ez) picked.push_back(Term{Monomial{t.mono.ey, 0, t.mono.et}, t.coeff});
    return from_terms(std::move(picked));
}

LaurentPoly LaurentPoly::coeff_of_y(std::int32_t ey) const {
    std::vector<Term> picked;
    for (const Term& t : terms_)
        if (t.mono.ey == ey) picked.push_back(Term{Monomial{0, t.mono.ez, t.mono.et}, t.coeff});
    return from_terms(std::move(picked));
}

bool LaurentPoly::has_y() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.mono.ey != 0; });
}
bool LaurentPoly::has_z() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.mono.ez != 0; });
}
bool LaurentPoly::has_t() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.mono.et != 0; });
}

std::int32_t LaurentPoly::min_ey() const {
    std::int32_t m = 0;
    bool first = true;
    for (const Term& t : terms_) {
        if (first || t.mono.ey < m) m = t.mono.ey;
        first = false;
    }
    return m;
}
std::int32_t LaurentPoly::max_ey() const {
    std::int32_t m = 0;
    bool first = true;
    for (const Term& t : terms_) {
        if (first || t.mono.ey > m) m = t.mono.ey;
        first = false;
    }
    return m;
}
std::int32_t LaurentPoly::max_ez() const {
    std::int32_t m = 0;
    for (const Term& t : terms_) m = std::max(m, t.mono.ez);
    return m;
}
std::int32_t LaurentPoly::max_et() const {
    std::int32_t m = 0;
    for (const Term& t : terms_) m = std::max(m, t.mono.et);
    return m;
}

bool LaurentPoly::all_integral() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return is_integral(t.coeff); });
}

LaurentPoly LaurentPoly::with_y_exponents_halved() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        if (t.mono.ey % 2 != 0)
            throw std::domain_error("with_y_exponents_halved: odd y exponent");
        out.push_back(Term{Monomial{t.mono.ey / 2, t.mono.ez, t.mono.et}, t.coeff});
    }
    return from_terms(std::move(out));
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) p.terms_.push_back(Term{t.mono, -t.coeff});
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    p.terms_ = merge_terms(a.terms_, b.terms_);
    return p;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
}

LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b, const PolyCaps& caps) {
    if (caps.max_ey != std::numeric_limits<std::int32_t>::max() &&
        (a.min_ey() < 0 || b.min_ey() < 0))
        throw std::invalid_argument("poly_mul: y cap requires nonnegative y exponents");
    if (a.is_zero() || b.is_zero()) return LaurentPoly{};

    const LaurentPoly& small = a.size() <= b.size() ? a : b;
    const LaurentPoly& big = a.size() <= b.size() ? b : a;

    if (small.size() <= kFoldThreshold) {
        // Fold shifted copies of the larger operand, one per small term.
        std::vector<Term> acc;
        for (const Term& s : small.terms_) {
            std::vector<Term> shifted;
            shifted.reserve(big.terms_.size());
            for (const Term& t : big.terms_) {
                Monomial m{t.mono.ey + s.mono.ey, t.mono.ez + s.mono.ez, t.mono.et + s.mono.et};
                if (!caps.admits(m)) continue;
                shifted.push_back(Term{m, s.coeff * t.coeff});
            }
            acc = merge_terms(std::move(acc), std::move(shifted));
        }
        LaurentPoly p;
        p.terms_ = std::move(acc);
        return p;
    }

    std::vector<Term> all;
    all.reserve(small.size() * big.size());
    for (const Term& s : small.terms_)
        for (const Term& t : big.terms_) {
            Monomial m{t.mono.ey + s.mono.ey, t.mono.ez + s.mono.ez, t.mono.et + s.mono.et};
            if (!caps.admits(m)) continue;
            all.push_back(Term{m, s.coeff * t.coeff});
        }
    LaurentPoly p;
    p.terms_ = canonicalize(std::move(all));
    return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    return poly_mul(a, b, PolyCaps{});
}

namespace {

void append_var(std::string& out, bool& first_factor, const char* name, std::int32_t e) {
    if (e == 0) return;
    if (!first_factor) out += '*';
    first_factor = false;
    out += name;
    if (e != 1) {
        out += '^';
        out += std::to_string(e);
    }
}

std::string render_magnitude(const Term& t) {
    ExactRat c = t.coeff < 0 ? ExactRat(-t.coeff) : t.coeff;
    const bool bare = t.mono.ey == 0 && t.mono.ez == 0 && t.mono.et == 0;
    std::string out;
    bool first_factor = true;
    if (c != 1 || bare) {
        out += c.get_str();
        first_factor = false;
    }
    append_var(out, first_factor, "y", t.mono.ey);
    append_var(out, first_factor, "z", t.mono.ez);
    append_var(out, first_factor, "t", t.mono.et);
    return out;
}

}  // namespace

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
        if (first) {
            if (t.coeff < 0) out += '-';
            first = false;
        } else {
            out += t.coeff < 0 ? " - " : " + ";
        }
        out += render_magnitude(t);
    }
    return out;
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("LaurentPoly::parse: " + why + " at position " +
                                    std::to_string(pos));
    }

    ExactInt parse_integer() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg = s[pos++] == '-';
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        ExactInt v(std::string(s.substr(start, pos - start)), 10);
        return neg ? ExactInt(-v) : v;
    }

    void parse_var_chain(Monomial& mono) {
        do {
            char v = peek();
            if (v != 'y' && v != 'z' && v != 't') fail("expected variable");
            ++pos;
            std::int32_t e = 1;
            if (accept('^')) e = static_cast<std::int32_t>(parse_integer().get_si());
            switch (v) {
                case 'y': mono.ey += e; break;
                case 'z': mono.ez += e; break;
                default: mono.et += e; break;
            }
        } while (accept('*'));
    }

    Term parse_term(bool negated) {
        ExactRat coeff(1);
        Monomial mono;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            ExactInt num = parse_integer();
            ExactInt den(1);
            if (accept('/')) den = parse_integer();
            coeff = make_rat(num, den);
            if (accept('*')) parse_var_chain(mono);
        } else {
            parse_var_chain(mono);
        }
        if (negated) coeff = -coeff;
        return Term{mono, std::move(coeff)};
    }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
    Parser p{text};
    std::vector<Term> terms;
    if (p.done()) throw std::invalid_argument("LaurentPoly::parse: empty input");
    bool neg = p.accept('-');
    if (!neg) p.accept('+');
    terms.push_back(p.parse_term(neg));
    while (!p.done()) {
        char op = p.peek();
        if (op != '+' && op != '-') p.fail("expected '+' or '-'");
        ++p.pos;
        terms.push_back(p.parse_term(op == '-'));
    }
    // "0" parses to the term 0*1 which from_terms drops.
    return from_terms(std::move(terms));
}

ExactRat laplace_at_one(const LaurentPoly& f) {
    if (f.has_y() || f.has_z())
        throw std::invalid_argument("laplace_at_one: input must be a polynomial in t only");
    ExactRat sum(0);
    for (const Term& term : f.terms()) sum += term.coeff * ExactRat(factorial(term.mono.et));
    return sum;
}

}  // namespace menage
