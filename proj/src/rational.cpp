#include "polyescape/rational.hpp"

#include <gmp.h>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace polyescape {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

std::size_t bit_size(const Integer& n) {
    if (n == 0) return 1;
    Integer a = n < 0 ? Integer(-n) : n;
    return mpz_sizeinbase(a.backend().data(), 2);
}

std::size_t bit_size(const Rational& q) {
    return bit_size(numerator(q)) + bit_size(denominator(q));
}

Integer numerator(const Rational& q) {
    return Integer(boost::multiprecision::numerator(q));
}

Integer denominator(const Rational& q) {
    return Integer(boost::multiprecision::denominator(q));
}

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
        if (s.empty()) throw ParseError("sign without digits in rational literal");
    }

    const auto slash = s.find('/');
    Rational result;
    if (slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction literal: " + std::string(text));
        Integer n{std::string(num)};
        Integer d{std::string(den)};
        if (d == 0) throw ParseError("zero denominator in rational literal");
        result = Rational(n, d);
    } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty())
            throw ParseError("malformed decimal literal: " + std::string(text));
        if (!whole.empty() && !all_digits(whole))
            throw ParseError("malformed decimal literal: " + std::string(text));
        if (!frac.empty() && !all_digits(frac))
            throw ParseError("malformed decimal literal: " + std::string(text));
        Integer w = whole.empty() ? Integer(0) : Integer{std::string(whole)};
        Integer scale = 1;
        Integer f = 0;
        if (!frac.empty()) {
            f = Integer{std::string(frac)};
            for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        }
        result = Rational(w * scale + f, scale);
    } else {
        if (!all_digits(s)) throw ParseError("malformed integer literal: " + std::string(text));
        result = Rational(Integer(std::string(s)));
    }
    return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_decimal_string(const Rational& q, int significant_digits) {
    if (significant_digits < 1) significant_digits = 1;
    if (q == 0) return "0";
    Integer num = numerator(q);
    Integer den = denominator(q);
    const bool neg = num < 0;
    if (neg) num = -num;

    // Find the decimal exponent e with 10^e <= num/den < 10^(e+1).
    long e = 0;
    Integer lo = num, hi = den;  // value = lo / hi
    while (lo >= hi * 10) {
        hi *= 10;
        ++e;
    }
    while (lo < hi) {
        lo *= 10;
        --e;
    }
    // digits = round(value / 10^(e+1-s) ) for s significant digits.
    // value = num/den; shift so that we extract `significant_digits` digits.
    Integer shifted_num = num;
    Integer shifted_den = den;
    const long shift = static_cast<long>(significant_digits) - 1 - e;
    if (shift >= 0) {
        for (long i = 0; i < shift; ++i) shifted_num *= 10;
    } else {
        for (long i = 0; i < -shift; ++i) shifted_den *= 10;
    }
    Integer digits = shifted_num / shifted_den;
    Integer rem = shifted_num % shifted_den;
    if (2 * rem >= shifted_den) ++digits;  // round half up

    std::string ds = digits.str();
    if (static_cast<int>(ds.size()) > significant_digits) {
        // Rounding produced an extra digit (e.g. 999.9 -> 1000).
        ds.pop_back();
        ++e;
    }
    // Strip trailing zeros but keep at least one digit.
    while (ds.size() > 1 && ds.back() == '0') ds.pop_back();

    std::ostringstream out;
    if (neg) out << '-';
    if (e >= 0 && e < significant_digits + 3 && e >= static_cast<long>(ds.size()) - 1) {
        // Integer-looking value: pad with zeros.
        out << ds;
        for (long i = static_cast<long>(ds.size()) - 1; i < e; ++i) out << '0';
    } else if (e >= 0 && e <= 8) {
        if (static_cast<long>(ds.size()) > e + 1) {
            out << ds.substr(0, static_cast<std::size_t>(e + 1)) << '.'
                << ds.substr(static_cast<std::size_t>(e + 1));
        } else {
            out << ds;
            for (long i = static_cast<long>(ds.size()) - 1; i < e; ++i) out << '0';
        }
    } else if (e < 0 && e >= -4) {
        out << "0.";
        for (long i = 1; i < -e; ++i) out << '0';
        out << ds;
    } else {
        out << ds.substr(0, 1);
        if (ds.size() > 1) out << '.' << ds.substr(1);
        out << 'e' << (e >= 0 ? "+" : "") << e;
    }
    return out.str();
}

bool is_dyadic(const Rational& q) {
    Integer d = denominator(q);
    // d is a power of two iff it has exactly one set bit.
    return mpz_popcount(d.backend().data()) == 1;
}

Integer floor_int(const Rational& q) {
    Integer n = numerator(q);
    Integer d = denominator(q);
    Integer quot;
    mpz_fdiv_q(quot.backend().data(), n.backend().data(), d.backend().data());
    return quot;
}

Integer ceil_int(const Rational& q) {
    Integer n = numerator(q);
    Integer d = denominator(q);
    Integer quot;
    mpz_cdiv_q(quot.backend().data(), n.backend().data(), d.backend().data());
    return quot;
}

Rational abs(const Rational& q) {
    return q < 0 ? Rational(-q) : q;
}

Rational pow2(long e) {
    Integer p = 1;
    if (e >= 0) {
        p <<= static_cast<unsigned long>(e);
        return Rational(p);
    }
    p <<= static_cast<unsigned long>(-e);
    return Rational(Integer(1), p);
}

Rational pow_rational(const Rational& q, unsigned long e) {
    Integer n, d;
    mpz_pow_ui(n.backend().data(), numerator(q).backend().data(), e);
    mpz_pow_ui(d.backend().data(), denominator(q).backend().data(), e);
    if (d == 0) throw std::logic_error("pow_rational internal error");
    return Rational(n, d);
}

bool perfect_square(const Integer& n, Integer& root) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.backend().data()) == 0) return false;
    mpz_sqrt(root.backend().data(), n.backend().data());
    return true;
}

}  // namespace polyescape
