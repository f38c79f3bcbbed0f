#pragma once

#include "logsine/index.hpp"
#include "logsine/rational.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace logsine {

/// One product sigma^a pi^b zeta(...)...zeta(...) [Li_k(e^{i sigma})].
/// At most one Li factor; all zeta and Li indices admissible.
struct Monomial {
    int sigma_pow = 0;
    int pi_pow = 0;
    std::vector<Index> zetas;  // kept sorted
    std::optional<Index> li;

    Monomial() = default;

    void sort_zetas() { std::sort(zetas.begin(), zetas.end()); }

    bool is_constant_one() const { return sigma_pow == 0 && pi_pow == 0 && zetas.empty() && !li; }

    /// Total weight (sigma and pi count 1 per power).
    long weight() const {
        long w = sigma_pow + pi_pow;
        for (auto& z : zetas) w += z.weight();
        if (li) w += li->weight();
        return w;
    }

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (a.sigma_pow != b.sigma_pow) return a.sigma_pow <=> b.sigma_pow;
        if (a.pi_pow != b.pi_pow) return a.pi_pow <=> b.pi_pow;
        if (auto c = a.zetas <=> b.zetas; c != 0) return c;
        if (a.li.has_value() != b.li.has_value()) return a.li.has_value() <=> b.li.has_value();
        if (a.li) return *a.li <=> *b.li;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

/// An exact Q(i)-linear combination of Monomials, the closed-form result
/// type. Canonically ordered, no zero coefficients stored. zeta atoms are
/// not reduced modulo known relations (zeta(2) stays zeta(2), not pi^2/6);
/// see normalized_even_zetas for the explicit rewrite.
class SymCombo {
public:
    using Map = std::map<Monomial, GaussRat>;

    SymCombo() = default;

    static SymCombo zero() { return {}; }
    static SymCombo constant(GaussRat c) { return SymCombo(Monomial{}, std::move(c)); }
    static SymCombo one() { return constant(GaussRat(1)); }
    static SymCombo sigma_power(int a, GaussRat c = GaussRat(1)) {
        Monomial m;
        m.sigma_pow = a;
        return SymCombo(m, std::move(c));
    }
    static SymCombo pi_power(int b, GaussRat c = GaussRat(1)) {
        Monomial m;
        m.pi_pow = b;
        return SymCombo(m, std::move(c));
    }
    static SymCombo zeta(const Index& k, GaussRat c = GaussRat(1)) {
        if (!k.admissible()) throw std::domain_error("SymCombo::zeta: non-admissible index (divergent)");
        Monomial m;
        m.zetas.push_back(k);
        return SymCombo(m, std::move(c));
    }
    static SymCombo li(const Index& k, GaussRat c = GaussRat(1)) {
        if (!k.admissible()) throw std::domain_error("SymCombo::li: non-admissible index");
        Monomial m;
        m.li = k;
        return SymCombo(m, std::move(c));
    }

    SymCombo(Monomial m, GaussRat c) {
        m.sort_zetas();
        if (!c.is_zero()) terms_[std::move(m)] = std::move(c);
    }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const Monomial& m, const GaussRat& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SymCombo& operator+=(const SymCombo& o) {
        for (auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    SymCombo& operator-=(const SymCombo& o) {
        for (auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    friend SymCombo operator+(SymCombo a, const SymCombo& b) { a += b; return a; }
    friend SymCombo operator-(SymCombo a, const SymCombo& b) { a -= b; return a; }
    SymCombo operator-() const {
        SymCombo r;
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    SymCombo scaled(const GaussRat& c) const {
        SymCombo r;
        if (c.is_zero()) return r;
        for (auto& [m, v] : terms_) {
            GaussRat p = v * c;
            if (!p.is_zero()) r.terms_[m] = std::move(p);
        }
        return r;
    }

    /// Ring product. A product of two monomials both carrying an Li atom is
    /// rejected: in-scope formulas never need it, so such a request is a bug.
    friend SymCombo operator*(const SymCombo& a, const SymCombo& b) {
        SymCombo out;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) {
                if (ma.li && mb.li)
                    throw std::domain_error("SymCombo: product of two Li-carrying monomials");
                Monomial m;
                m.sigma_pow = ma.sigma_pow + mb.sigma_pow;
                m.pi_pow = ma.pi_pow + mb.pi_pow;
                m.zetas = ma.zetas;
                m.zetas.insert(m.zetas.end(), mb.zetas.begin(), mb.zetas.end());
                m.sort_zetas();
                m.li = ma.li ? ma.li : mb.li;
                out.add(m, ca * cb);
            }
        return out;
    }
    SymCombo& operator*=(const SymCombo& o) { *this = *this * o; return *this; }

    friend bool operator==(const SymCombo& a, const SymCombo& b) = default;

    /// Substitute sigma = 2m pi (m >= 1): sigma^a folds into pi_pow and
    /// Li_k(e^{2m pi i}) becomes zeta(k) (legal: every Li index is admissible).
    SymCombo subst_sigma_2mpi(int m) const {
        if (m < 1) throw std::domain_error("subst_sigma_2mpi: m must be >= 1");
        SymCombo out;
        for (auto& [mon, c] : terms_) {
            Monomial t;
            t.sigma_pow = 0;
            t.pi_pow = mon.pi_pow + mon.sigma_pow;
            t.zetas = mon.zetas;
            if (mon.li) {
                t.zetas.push_back(*mon.li);
                t.sort_zetas();
            }
            GaussRat coeff = c * GaussRat(Rational(integer_pow(Integer(2 * m), mon.sigma_pow)));
            out.add(t, coeff);
        }
        return out;
    }

    /// Substitute sigma = 0: sigma-carrying terms vanish, Li_k(1) = zeta(k).
    SymCombo subst_sigma_zero() const {
        SymCombo out;
        for (auto& [mon, c] : terms_) {
            if (mon.sigma_pow > 0) continue;
            Monomial t = mon;
            if (t.li) {
                t.zetas.push_back(*t.li);
                t.li.reset();
                t.sort_zetas();
            }
            out.add(t, c);
        }
        return out;
    }

    /// Optional rewrite: depth-1 even zeta atoms to pi powers,
    /// zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!).
    SymCombo normalized_even_zetas() const {
        SymCombo out;
        for (auto& [mon, c] : terms_) {
            Monomial t;
            t.sigma_pow = mon.sigma_pow;
            t.pi_pow = mon.pi_pow;
            t.li = mon.li;
            GaussRat coeff = c;
            for (auto& z : mon.zetas) {
                if (z.depth() == 1 && z[0] % 2 == 0) {
                    int twom = z[0];
                    Rational f = bernoulli_number(twom) * Rational(integer_pow(Integer(2), twom)) /
                                 (Rational(2) * Rational(factorial(twom)));
                    if ((twom / 2) % 2 == 0) f = -f;  // (-1)^{m+1}
                    coeff *= GaussRat(f);
                    t.pi_pow += twom;
                } else {
                    t.zetas.push_back(z);
                }
            }
            t.sort_zetas();
            out.add(t, coeff);
        }
        return out;
    }

    std::string str() const;

private:
    Map terms_;
};

enum class CGKind { Cl, Gl };

/// Monomial with a Clausen/Glaisher atom in place of the Li atom.
struct CGMonomial {
    int sigma_pow = 0;
    int pi_pow = 0;
    std::vector<Index> zetas;
    std::optional<std::pair<CGKind, Index>> cg;

    void sort_zetas() { std::sort(zetas.begin(), zetas.end()); }

    friend std::strong_ordering operator<=>(const CGMonomial& a, const CGMonomial& b) {
        if (a.sigma_pow != b.sigma_pow) return a.sigma_pow <=> b.sigma_pow;
        if (a.pi_pow != b.pi_pow) return a.pi_pow <=> b.pi_pow;
        if (auto c = a.zetas <=> b.zetas; c != 0) return c;
        if (a.cg.has_value() != b.cg.has_value()) return a.cg.has_value() <=> b.cg.has_value();
        if (a.cg) {
            if (a.cg->first != b.cg->first) return (int)a.cg->first <=> (int)b.cg->first;
            return a.cg->second <=> b.cg->second;
        }
        return std::strong_ordering::equal;
    }
    friend bool operator==(const CGMonomial& a, const CGMonomial& b) = default;
};

/// Real-coefficient combination of CGMonomials; produced by cl_gl_split.
class CGCombo {
public:
    using Map = std::map<CGMonomial, Rational>;

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const CGMonomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend bool operator==(const CGCombo& a, const CGCombo& b) = default;

    std::string str() const;

private:
    Map terms_;
};

namespace detail {
inline void emit_power(std::ostringstream& os, const char* sym, int pow) {
    os << sym;
    if (pow != 1) os << "^" << pow;
}
}  // namespace detail

inline std::string SymCombo::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (m.sigma_pow) { os << "*"; detail::emit_power(os, "s", m.sigma_pow); }
        if (m.pi_pow) { os << "*"; detail::emit_power(os, "pi", m.pi_pow); }
        for (auto& z : m.zetas) os << "*zeta(" << z.str() << ")";
        if (m.li) os << "*Li(" << m.li->str() << ")";
    }
    return os.str();
}

inline std::string CGCombo::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (m.sigma_pow) { os << "*"; detail::emit_power(os, "s", m.sigma_pow); }
        if (m.pi_pow) { os << "*"; detail::emit_power(os, "pi", m.pi_pow); }
        for (auto& z : m.zetas) os << "*zeta(" << z.str() << ")";
        if (m.cg) os << "*" << (m.cg->first == CGKind::Cl ? "Cl(" : "Gl(") << m.cg->second.str() << ")";
    }
    return os.str();
}

}  // namespace logsine
