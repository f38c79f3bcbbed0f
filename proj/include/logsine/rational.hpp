#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace logsine {

using Integer  = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

inline Integer factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Integer r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline Integer integer_pow(const Integer& b, long e) {
    if (e < 0) throw std::domain_error("integer_pow: negative exponent");
    Integer r = 1, base = b;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rational rational_pow(const Rational& b, long e) {
    if (e < 0) {
        if (b == 0) throw std::domain_error("rational_pow: zero to negative power");
        return Rational(1) / rational_pow(b, -e);
    }
    Rational r = 1, base = b;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// Parses "p/q" or "p" (arbitrary magnitude, optional sign).
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    return Rational(s);
}

inline std::string to_string(const Rational& q) { return q.str(); }

// Bernoulli numbers B_n with B_1 = -1/2, memoized.
inline const Rational& bernoulli_number(int n) {
    if (n < 0) throw std::domain_error("bernoulli_number: negative index");
    static std::vector<Rational> table = {Rational(1)};
    while ((int)table.size() <= n) {
        int m = (int)table.size();
        // sum_{j=0}^{m} binom(m+1, j) B_j = 0
        Rational acc = 0;
        for (int j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * table[j];
        table.push_back(-acc / Rational(m + 1));
    }
    return table[n];
}

/// n-th Bernoulli polynomial at a rational point, exactly.
inline Rational bernoulli_poly(int n, const Rational& x) {
    if (n < 0) throw std::domain_error("bernoulli_poly: negative degree");
    Rational r = 0;
    for (int k = 0; k <= n; ++k)
        r += Rational(binomial(n, k)) * bernoulli_number(k) * rational_pow(x, n - k);
    return r;
}

/// Exact element of Q(i).
struct GaussRat {
    Rational re{0};
    Rational im{0};

    GaussRat() = default;
    GaussRat(Rational r) : re(std::move(r)) {}  // NOLINT: implicit from Rational
    GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussRat(long r) : re(r) {}  // NOLINT

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    GaussRat operator-() const { return {-re, -im}; }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { a += b; return a; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { a -= b; return a; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    /// i^e for any integer e (negative allowed).
    static GaussRat i_power(long e) {
        long m = ((e % 4) + 4) % 4;
        switch (m) {
            case 0: return {Rational(1), Rational(0)};
            case 1: return {Rational(0), Rational(1)};
            case 2: return {Rational(-1), Rational(0)};
            default: return {Rational(0), Rational(-1)};
        }
    }

    std::string str() const {
        if (im == 0) return re.str();
        if (re == 0) return im.str() + "*i";
        return "(" + re.str() + (im > 0 ? "+" : "") + im.str() + "*i)";
    }
};

}  // namespace logsine
