#pragma once

#include "logsine/bigfloat.hpp"
#include "logsine/symcombo.hpp"
#include "logsine/word.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace logsine {

/// Exact cache key for the evaluation point sigma: a rational multiple of
/// pi, or a verbatim decimal literal. Never a floating value.
struct SigmaToken {
    enum class Kind { PiMultiple, Decimal };
    Kind kind = Kind::PiMultiple;
    Rational mult{0};
    std::string literal;

    static SigmaToken pi_multiple(Rational m) {
        SigmaToken t;
        t.kind = Kind::PiMultiple;
        t.mult = std::move(m);
        return t;
    }
    static SigmaToken decimal(std::string s) {
        SigmaToken t;
        t.kind = Kind::Decimal;
        t.literal = std::move(s);
        Real probe(t.literal);  // validate
        (void)probe;
        return t;
    }
    static SigmaToken zero() { return pi_multiple(Rational(0)); }

    /// True when e^{i sigma} = 1, i.e. sigma is an even integer multiple of pi.
    bool at_unit_point() const {
        return kind == Kind::PiMultiple && denominator(mult) == 1 && numerator(mult) % 2 == 0;
    }

    /// Numeric value at the current default precision.
    Real value() const {
        if (kind == Kind::PiMultiple) return to_real(mult) * pi_value();
        return Real(literal);
    }

    std::string str() const {
        if (kind == Kind::Decimal) return literal;
        if (mult == 0) return "0";
        std::string num = numerator(mult).str();
        std::string s = (num == "1") ? "pi" : (num == "-1" ? "-pi" : num + "pi");
        if (denominator(mult) != 1) s += "/" + denominator(mult).str();
        return s;
    }

    /// Accepts "pi/3", "2pi/3", "-pi", "0", or a decimal literal.
    static SigmaToken parse(const std::string& s) {
        auto pos = s.find("pi");
        if (pos == std::string::npos) return decimal(s);
        std::string head = s.substr(0, pos), tail = s.substr(pos + 2);
        Rational m;
        if (head.empty() || head == "+")
            m = 1;
        else if (head == "-")
            m = -1;
        else
            m = Rational(Integer(head));
        if (!tail.empty()) {
            if (tail[0] != '/') throw std::invalid_argument("SigmaToken::parse: bad suffix in '" + s + "'");
            m /= Rational(Integer(tail.substr(1)));
        }
        return pi_multiple(m);
    }

    friend auto operator<=>(const SigmaToken& a, const SigmaToken& b) {
        if (a.kind != b.kind) return (int)a.kind <=> (int)b.kind;
        if (a.kind == Kind::PiMultiple) {
            if (a.mult < b.mult) return std::strong_ordering::less;
            if (b.mult < a.mult) return std::strong_ordering::greater;
            return std::strong_ordering::equal;
        }
        return a.literal <=> b.literal;
    }
    friend bool operator==(const SigmaToken& a, const SigmaToken& b) { return (a <=> b) == 0; }
};

/// Precision policy plus the constant cache. Cached atoms record the
/// precision they were computed at and are reused only when at least the
/// current demand. The cache is one logical map with get-or-compute
/// semantics, usable from several threads; values are deterministic for a
/// fixed precision regardless of schedule.
struct EvalContext {
    int precision_digits = 30;
    int guard_digits = 10;

    struct CacheKey {
        char kind;  // 'Z' or 'L'
        Word word;
        SigmaToken sigma;
        friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
    };
    struct CacheEntry {
        BigComplex value;
        int digits;
    };
    struct Cache {
        std::map<CacheKey, CacheEntry> map;
        std::mutex mutex;
    };
    std::shared_ptr<Cache> cache = std::make_shared<Cache>();  // copies share the cache

    int work_digits() const { return precision_digits + guard_digits + 5; }
};

namespace transport {

// The prefix vector (L(u_1...u_j; t))_{j=0..W} satisfies the triangular ODE
// L_j' = omega_{u_j} L_{j-1} with omega_0 = dt/t, omega_1 = dt/(1-t). All
// routines work at the current default precision with a fixed series length;
// the step ratio |delta|/dist(center, {0,1}) is kept at or below 1/2, so the
// terms decay at least geometrically with ratio 1/2 up to slowly varying
// log factors.

inline int series_terms() {
    Real probe(0);  // carries the current default precision
    long bits = mpfr_get_prec(probe.backend().data());
    return (int)bits + 96;
}

template <class F>
F horner(const std::vector<F>& coeff, const F& x) {
    F acc = coeff.back();
    for (int m = (int)coeff.size() - 2; m >= 0; --m) acc = acc * x + coeff[m];
    return acc;
}

/// Taylor coefficients at center 0 for all prefixes (radius 1; the word and
/// every prefix must start with e1). Coefficients are real.
inline std::vector<std::vector<Real>> series_at_zero(const Word& w, int terms) {
    int W = w.length();
    std::vector<std::vector<Real>> a(W + 1, std::vector<Real>(terms + 1, Real(0)));
    a[0][0] = 1;
    for (int j = 1; j <= W; ++j) {
        if (w.at(j - 1) == Letter::E0) {
            if (j == 1) throw std::domain_error("series_at_zero: word outside H1");
            for (int m = 1; m <= terms; ++m) a[j][m] = a[j - 1][m] / m;
        } else {
            Real run(0);
            for (int m = 1; m <= terms; ++m) {
                run += a[j - 1][m - 1];
                a[j][m] = run / m;
            }
        }
    }
    return a;
}

template <class F>
std::vector<F> prefixes_from_zero(const Word& w, const F& t, int terms) {
    auto coeff = series_at_zero(w, terms);
    std::vector<F> out;
    out.reserve(coeff.size());
    for (auto& cj : coeff) {
        std::vector<F> lifted;
        lifted.reserve(cj.size());
        for (auto& c : cj) lifted.emplace_back(F(c));
        out.push_back(horner(lifted, t));
    }
    return out;
}

/// Transport the prefix vector from center c to c + delta. The convolution
/// with the geometric expansion of 1/t or 1/(1-t) reduces to a first-order
/// recurrence, so a step costs O(W * terms).
inline std::vector<BigComplex> step(const Word& w, const std::vector<BigComplex>& at_c,
                                    const BigComplex& c, const BigComplex& delta, int terms) {
    int W = w.length();
    std::vector<BigComplex> out(W + 1);
    out[0] = BigComplex(Real(1));
    std::vector<BigComplex> prev(terms + 1), cur(terms + 1);
    prev[0] = BigComplex(Real(1));
    for (int m = 1; m <= terms; ++m) prev[m] = BigComplex(Real(0));
    const BigComplex one(Real(1));
    for (int j = 1; j <= W; ++j) {
        BigComplex g0, beta;
        if (w.at(j - 1) == Letter::E0) {
            g0 = one / c;
            beta = -g0;
        } else {
            g0 = one / (one - c);
            beta = g0;
        }
        cur[0] = at_c[j];
        BigComplex d = g0 * prev[0];
        for (int m = 1; m <= terms; ++m) {
            cur[m] = d;
            cur[m].re /= m;
            cur[m].im /= m;
            if (m < terms) d = beta * d + g0 * prev[m];
        }
        out[j] = horner(cur, delta);
        std::swap(prev, cur);
    }
    return out;
}

/// Values of all prefixes of w at z, for z inside the closed unit disc,
/// z not in {0, 1}. Straight-chord path from 0 with re-expansion centers.
inline std::vector<BigComplex> prefixes_at(const Word& w, const BigComplex& z) {
    int terms = series_terms();
    if (w.empty()) return {BigComplex(Real(1))};
    const Real half = Real(1) / 2;
    Real r = z.abs();
    BigComplex a = z;
    bool done = true;
    if (r > half) {
        a = (half / r) * z;
        done = false;
    }
    std::vector<BigComplex> v = prefixes_from_zero(w, a, terms);
    const BigComplex one(Real(1));
    while (!done) {
        Real rho = a.abs();
        Real d1 = (a - one).abs();
        if (d1 < rho) rho = d1;
        BigComplex rem = z - a;
        Real rem_abs = rem.abs();
        Real max_step = half * rho;
        BigComplex delta = rem;
        if (rem_abs <= max_step) {
            done = true;
        } else {
            delta = (max_step / rem_abs) * rem;
        }
        v = step(w, v, a, delta, terms);
        a += delta;
    }
    return v;
}

}  // namespace transport

namespace detail {
inline BigComplex cached_eval(const EvalContext& ctx, char kind, const Word& w, const SigmaToken& tok,
                              const std::function<BigComplex()>& compute) {
    EvalContext::CacheKey key{kind, w, tok};
    {
        std::lock_guard<std::mutex> lock(ctx.cache->mutex);
        auto it = ctx.cache->map.find(key);
        if (it != ctx.cache->map.end() && it->second.digits >= ctx.precision_digits)
            return it->second.value;
    }
    BigComplex v = compute();
    std::lock_guard<std::mutex> lock(ctx.cache->mutex);
    auto [it, fresh] = ctx.cache->map.emplace(key, EvalContext::CacheEntry{v, ctx.precision_digits});
    if (!fresh && it->second.digits < ctx.precision_digits) it->second = {v, ctx.precision_digits};
    return v;
}
}  // namespace detail

/// zeta of an admissible word, through the path composition 0 -> 1/2 -> 1:
/// the upper leg maps to series at 1/2 under t -> 1-t with the letters
/// swapped, so zeta(w) = sum over deconcatenations w = uv of
/// L(u; 1/2) * L(reverse_swap(v); 1/2).
inline Real mzv_eval_word(const Word& w, const EvalContext& ctx) {
    if (subspace_of(w) != Subspace::H0)
        throw std::domain_error("mzv_eval: non-admissible (divergent) index");
    BigComplex v = detail::cached_eval(ctx, 'Z', w, SigmaToken::zero(), [&]() -> BigComplex {
        PrecisionGuard guard(ctx.work_digits());
        int terms = transport::series_terms();
        Real half = Real(1) / 2;
        auto lower = transport::prefixes_from_zero(w, half, terms);
        auto upper = transport::prefixes_from_zero(w.reverse_swap(), half, terms);
        int W = w.length();
        Real acc(0);
        for (int j = 0; j <= W; ++j) acc += lower[j] * upper[W - j];
        return BigComplex(acc);
    });
    Real out(0);
    out = v.re;
    return out;
}

inline Real mzv_eval(const Index& k, const EvalContext& ctx) {
    if (!k.admissible()) throw std::domain_error("mzv_eval: non-admissible (divergent) index");
    return mzv_eval_word(index_word(k), ctx);
}

/// L(w; e^{i sigma}) for w in H1. Admissible words are required at
/// sigma in 2 pi Z (where the value is the zeta value); elsewhere the word
/// may end in e1.
inline BigComplex mpl_eval_word(const Word& w, const SigmaToken& sigma, const EvalContext& ctx) {
    if (subspace_of(w) == Subspace::Neither)
        throw std::domain_error("mpl_eval: word outside H1");
    if (sigma.at_unit_point()) {
        if (subspace_of(w) != Subspace::H0)
            throw std::domain_error("mpl_eval: non-admissible index at sigma in 2 pi Z (divergent)");
        return BigComplex(mzv_eval_word(w, ctx));
    }
    return detail::cached_eval(ctx, 'L', w, sigma, [&]() -> BigComplex {
        PrecisionGuard guard(ctx.work_digits());
        Real s = sigma.value();
        BigComplex z{cos(s), sin(s)};
        auto v = transport::prefixes_at(w, z);
        return v.back();
    });
}

inline BigComplex mpl_eval(const Index& k, const SigmaToken& sigma, const EvalContext& ctx) {
    for (int u = 0; u < k.depth(); ++u)
        if (k[u] < 1) throw std::domain_error("mpl_eval: entry < 1");
    return mpl_eval_word(index_word(k), sigma, ctx);
}

struct SeriesResult {
    BigComplex value;
    Real tail_bound;
};

/// Direct truncated nested summation of Li_k(e^{i sigma}) with an explicit
/// tail bound, the low-precision cross-check fallback for the transport
/// evaluator. On the unit circle the tail decays only polynomially,
/// O(M^{1-k_n} log^{n-1} M), so this path tops out around 12 digits.
inline SeriesResult mpl_series_direct(const Index& k, const SigmaToken& sigma, long terms) {
    if (!k.admissible() || k.empty())
        throw std::domain_error("mpl_series_direct: admissible nonempty index required");
    if (terms < 10) throw std::invalid_argument("mpl_series_direct: need at least 10 terms");
    int n = k.depth();
    Real s = sigma.value();
    // inner partial sums over m_1 < ... < m_{n-1} <= m
    std::vector<Real> prev(terms + 1, Real(1));
    for (int j = 1; j < n; ++j) {
        std::vector<Real> cur(terms + 1, Real(0));
        Real acc(0);
        for (long m = 1; m <= terms; ++m) {
            acc += prev[m - 1] / real_pow_int(Real(m), k[j - 1]);
            cur[m] = acc;
        }
        prev = std::move(cur);
    }
    BigComplex acc;
    BigComplex z{cos(s), sin(s)};
    BigComplex zm(Real(1));
    for (long m = 1; m <= terms; ++m) {
        zm *= z;
        acc += (prev[m - 1] / real_pow_int(Real(m), k.last())) * zm;
    }
    Real logM = log(Real(terms));
    SeriesResult r;
    r.value = acc;
    r.tail_bound = Real(2) * real_pow_int(Real(Rational(33, 20)) + logM, n - 1) /
                   (Real(k.last() - 1) * real_pow_int(Real(terms), k.last() - 1));
    return r;
}

/// Parity-selected real or imaginary part of Li_k(e^{i sigma}).
inline Real cl_gl_eval(CGKind kind, const Index& k, const SigmaToken& sigma, const EvalContext& ctx) {
    BigComplex li = mpl_eval(k, sigma, ctx);
    bool even = (k.weight() % 2 == 0);
    bool want_im = (kind == CGKind::Cl) == even;
    return want_im ? li.im : li.re;
}

/// Numeric value of a SymCombo at sigma.
inline BigComplex combo_eval(const SymCombo& c, const SigmaToken& sigma, const EvalContext& ctx) {
    PrecisionGuard guard(ctx.work_digits());
    Real s = sigma.value();
    Real pi = pi_value();
    BigComplex acc;
    for (auto& [mon, coeff] : c.terms()) {
        BigComplex t = to_complex(coeff);
        if (mon.sigma_pow) t = real_pow_int(s, mon.sigma_pow) * t;
        if (mon.pi_pow) t = real_pow_int(pi, mon.pi_pow) * t;
        for (auto& z : mon.zetas) t = mzv_eval(z, ctx) * t;
        if (mon.li) t *= mpl_eval(*mon.li, sigma, ctx);
        acc += t;
    }
    return acc;
}

/// Numeric value of a CGCombo at sigma (real).
inline Real combo_eval(const CGCombo& c, const SigmaToken& sigma, const EvalContext& ctx) {
    PrecisionGuard guard(ctx.work_digits());
    Real s = sigma.value();
    Real pi = pi_value();
    Real acc(0);
    for (auto& [mon, coeff] : c.terms()) {
        Real t = to_real(coeff);
        if (mon.sigma_pow) t *= real_pow_int(s, mon.sigma_pow);
        if (mon.pi_pow) t *= real_pow_int(pi, mon.pi_pow);
        for (auto& z : mon.zetas) t *= mzv_eval(z, ctx);
        if (mon.cg) t *= cl_gl_eval(mon.cg->first, mon.cg->second, sigma, ctx);
        acc += t;
    }
    return acc;
}

}  // namespace logsine
