#pragma once

#include "logsine/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <utility>

namespace logsine {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

/// Scoped default working precision (decimal digits).
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits10) : saved_(Real::default_precision()) {
        Real::default_precision(digits10);
    }
    ~PrecisionGuard() { Real::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

/// pi at the current default precision.
inline Real pi_value() {
    Real p(0);
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

inline Real to_real(const Rational& q) {
    Real r(0);
    mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
    return r;
}

inline Real real_pow_int(const Real& base, long e) {
    if (e == 0) return Real(1);
    if (e < 0) return Real(1) / real_pow_int(base, -e);
    Real r(1), b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

/// Arbitrary-precision complex value; precision follows the default at
/// construction time.
struct BigComplex {
    Real re{0};
    Real im{0};

    BigComplex() = default;
    BigComplex(Real r) : re(std::move(r)) {}  // NOLINT
    BigComplex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(long v) : re(v) {}  // NOLINT

    static BigComplex i() { return {Real(0), Real(1)}; }

    BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
    BigComplex& operator-=(const BigComplex& o) { re -= o.re; im -= o.im; return *this; }
    BigComplex operator-() const { return {-re, -im}; }

    friend BigComplex operator+(BigComplex a, const BigComplex& b) { a += b; return a; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { a -= b; return a; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    BigComplex& operator*=(const BigComplex& o) { *this = *this * o; return *this; }
    friend BigComplex operator*(const Real& s, const BigComplex& a) { return {s * a.re, s * a.im}; }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    BigComplex& operator/=(const BigComplex& o) { *this = *this / o; return *this; }

    BigComplex conj() const { return {re, -im}; }
    Real norm() const { return re * re + im * im; }
    Real abs() const { return sqrt(norm()); }

    friend BigComplex pow_int(const BigComplex& base, long e) {
        if (e == 0) return BigComplex(Real(1));
        if (e < 0) return BigComplex(Real(1)) / pow_int(base, -e);
        BigComplex r(Real(1)), b = base;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::string str(int digits = 0) const {
        std::string s = re.str(digits);
        if (im != 0) s += (im < 0 ? " - " : " + ") + boost::multiprecision::abs(im).str(digits) + "*i";
        return s;
    }
};

inline BigComplex to_complex(const GaussRat& g) { return {to_real(g.re), to_real(g.im)}; }

/// -log(1 - z), principal branch.
inline BigComplex log1m(const BigComplex& z) {
    BigComplex w{Real(1) - z.re, -z.im};
    Real r = w.abs();
    Real theta = atan2(w.im, w.re);
    return -BigComplex{log(r), theta};
}

}  // namespace logsine
