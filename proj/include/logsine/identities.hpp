#pragma once

#include "logsine/closed_form.hpp"
#include "logsine/eval.hpp"

#include <string>
#include <vector>

namespace logsine {

/// One term of an evaluable constant expression at sigma = pi/3:
/// coeff * pi^{pi_pow} * atom.
struct ConstTerm {
    GaussRat coeff{Rational(1)};
    int pi_pow = 0;
    enum class Atom { One, Zeta, SLs, Cl, Gl, Li } atom = Atom::One;
    Index index;
};

using ConstTermSum = std::vector<ConstTerm>;

inline BigComplex eval_terms(const ConstTermSum& terms, const EvalContext& ctx) {
    PrecisionGuard guard(ctx.work_digits());
    const SigmaToken third = SigmaToken::pi_multiple(Rational(1, 3));
    BigComplex acc;
    for (auto& t : terms) {
        BigComplex v = to_complex(t.coeff);
        if (t.pi_pow) v = real_pow_int(pi_value(), t.pi_pow) * v;
        switch (t.atom) {
            case ConstTerm::Atom::One: break;
            case ConstTerm::Atom::Zeta: v = mzv_eval(t.index, ctx) * v; break;
            case ConstTerm::Atom::SLs: v *= combo_eval(sls_closed_form(t.index), third, ctx); break;
            case ConstTerm::Atom::Cl: v = cl_gl_eval(CGKind::Cl, t.index, third, ctx) * v; break;
            case ConstTerm::Atom::Gl: v = cl_gl_eval(CGKind::Gl, t.index, third, ctx) * v; break;
            case ConstTerm::Atom::Li: v *= mpl_eval(t.index, third, ctx); break;
        }
        acc += v;
    }
    return acc;
}

inline std::string terms_str(const ConstTermSum& terms) {
    if (terms.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < terms.size(); ++i) {
        auto& t = terms[i];
        if (i) s += " + ";
        s += t.coeff.str();
        if (t.pi_pow == 1) s += "*pi";
        if (t.pi_pow > 1) s += "*pi^" + std::to_string(t.pi_pow);
        switch (t.atom) {
            case ConstTerm::Atom::One: break;
            case ConstTerm::Atom::Zeta: s += "*zeta(" + t.index.str() + ")"; break;
            case ConstTerm::Atom::SLs: s += "*SLs(" + t.index.str() + ")"; break;
            case ConstTerm::Atom::Cl: s += "*Cl(" + t.index.str() + ")"; break;
            case ConstTerm::Atom::Gl: s += "*Gl(" + t.index.str() + ")"; break;
            case ConstTerm::Atom::Li: s += "*Li(" + t.index.str() + ")"; break;
        }
    }
    return s;
}

/// Right-hand side of the Choi--Cho--Srivastava evaluation of
/// int_0^{pi/3} (theta - pi/3)^{2k+1} A(theta) d theta:
/// -(1/2)(2k+1)!(1-2^{-2k-2})(1-3^{-2k-2}) zeta(2k+3)
/// + (2k+1)! sum_{m=0}^{k} (-1)^m (pi/3)^{2m} zeta(2k+3-2m)/(2m)!.
/// (-1)^k times this equals SLs(2k+3; pi/3).
inline SymCombo ccs_identity(int k) {
    if (k < 0) throw std::domain_error("ccs_identity: k must be >= 0");
    Rational fac(factorial(2 * k + 1));
    Rational lead = -fac / 2 * (Rational(1) - Rational(1, integer_pow(Integer(2), 2 * k + 2))) *
                    (Rational(1) - Rational(1, integer_pow(Integer(3), 2 * k + 2)));
    SymCombo out = SymCombo::zeta(Index{2 * k + 3}, GaussRat(lead));
    for (int m = 0; m <= k; ++m) {
        Rational c = fac / Rational(factorial(2 * m)) / Rational(integer_pow(Integer(3), 2 * m));
        if (m % 2) c = -c;
        out += SymCombo::pi_power(2 * m, GaussRat(c)) * SymCombo::zeta(Index{2 * k + 3 - 2 * m});
    }
    return out;
}

struct IdentityPair {
    std::string name;
    ConstTermSum lhs;
    ConstTermSum rhs;
};

namespace detail {
inline Index ones_two_ones(int a, int b) {
    Index k;
    for (int i = 0; i < a; ++i) k.push_back(1);
    k.push_back(2);
    for (int i = 0; i < b; ++i) k.push_back(1);
    return k;
}
}  // namespace detail

/// The named special identities at pi/3, both sides as evaluable term sums.
///   cl_odd(k>=1):          Cl_{2k+1}(pi/3) = (1/2)(1-2^{-2k})(1-3^{-2k}) zeta(2k+1)
///   cl_even_via_sls(k>=0): Cl_{2k+2}(pi/3) = -((-1)^k/(2k)!) SLs(2k+2) + ...
///   gl_bernoulli(k>=2):    Gl_k(pi/3) = (-1)^{1+[k/2]} 2^{k-1} pi^k B_k(1/6)/k!
///   li_ones_two_ones(a,b): Li_{1^a,2,1^b}(e^{i pi/3}) as an SLs combination
inline IdentityPair special_identity(const std::string& name, int p1, int p2 = 0) {
    IdentityPair out;
    out.name = name;
    if (name == "cl_odd") {
        int k = p1;
        if (k < 1) throw std::domain_error("cl_odd: k must be >= 1");
        out.lhs.push_back({GaussRat(1), 0, ConstTerm::Atom::Cl, Index{2 * k + 1}});
        Rational c = Rational(1, 2) * (Rational(1) - Rational(1, integer_pow(Integer(2), 2 * k))) *
                     (Rational(1) - Rational(1, integer_pow(Integer(3), 2 * k)));
        out.rhs.push_back({GaussRat(c), 0, ConstTerm::Atom::Zeta, Index{2 * k + 1}});
    } else if (name == "cl_even_via_sls") {
        int k = p1;
        if (k < 0) throw std::domain_error("cl_even_via_sls: k must be >= 0");
        out.lhs.push_back({GaussRat(1), 0, ConstTerm::Atom::Cl, Index{2 * k + 2}});
        Rational c = -Rational(1) / Rational(factorial(2 * k));
        if (k % 2) c = -c;
        out.rhs.push_back({GaussRat(c), 0, ConstTerm::Atom::SLs, Index{2 * k + 2}});
        for (int j = 0; j <= k - 1; ++j) {
            int e = 2 * k - 2 * j - 1;
            Rational cj = Rational(1, integer_pow(Integer(3), e)) / Rational(factorial(e));
            if ((k - j - 1) % 2) cj = -cj;
            out.rhs.push_back({GaussRat(cj), e, ConstTerm::Atom::Zeta, Index{3 + 2 * j}});
        }
    } else if (name == "gl_bernoulli") {
        int k = p1;
        if (k < 2) throw std::domain_error("gl_bernoulli: k must be >= 2");
        out.lhs.push_back({GaussRat(1), 0, ConstTerm::Atom::Gl, Index{k}});
        Rational c = Rational(integer_pow(Integer(2), k - 1)) * bernoulli_poly(k, Rational(1, 6)) /
                     Rational(factorial(k));
        if ((1 + k / 2) % 2) c = -c;
        out.rhs.push_back({GaussRat(c), k, ConstTerm::Atom::One, Index{}});
    } else if (name == "li_ones_two_ones") {
        int a = p1, b = p2;
        if (a < 0 || b < 0) throw std::domain_error("li_ones_two_ones: a, b must be >= 0");
        out.lhs.push_back({GaussRat(1), 0, ConstTerm::Atom::Li, detail::ones_two_ones(a, b)});
        if (b == 0) {
            for (int j = 0; j <= a; ++j) {
                GaussRat c = GaussRat::i_power(a + 1) *
                             GaussRat(-Rational(binomial(a, j)) / Rational(factorial(a)) /
                                      Rational(integer_pow(Integer(3), j)));
                out.rhs.push_back({c, j, ConstTerm::Atom::SLs, Index{a + 2 - j}});
            }
            GaussRat tail = GaussRat::i_power(a) *
                            GaussRat(Rational(1, 2 * integer_pow(Integer(3), a + 2)) /
                                     Rational(factorial(a + 2)));
            out.rhs.push_back({tail, a + 2, ConstTerm::Atom::One, Index{}});
        } else {
            Rational s1 = Rational(1) / Rational(factorial(a + 1)) / Rational(factorial(b - 1));
            if ((b - 1) % 2) s1 = -s1;
            for (int j = 0; j <= a + 1; ++j) {
                GaussRat c = GaussRat::i_power(a + b + 1) *
                             GaussRat(s1 * Rational(binomial(a + 1, j)) /
                                      Rational(integer_pow(Integer(3), j)));
                out.rhs.push_back({c, j, ConstTerm::Atom::SLs, Index{a + b + 2 - j}});
            }
            Rational s2 = Rational(1) / Rational(factorial(a)) / Rational(factorial(b));
            if (b % 2 == 0) s2 = -s2;  // minus the (-1)^b sum
            for (int j = 0; j <= a; ++j) {
                GaussRat c = GaussRat::i_power(a + b + 1) *
                             GaussRat(s2 * Rational(binomial(a, j)) /
                                      Rational(integer_pow(Integer(3), j)));
                out.rhs.push_back({c, j, ConstTerm::Atom::SLs, Index{a + b + 2 - j}});
            }
            GaussRat tail = GaussRat::i_power(a + b) *
                            GaussRat(Rational(1, 2 * integer_pow(Integer(3), a + b + 2)) /
                                     Rational(factorial(a + b + 2)));
            out.rhs.push_back({tail, a + b + 2, ConstTerm::Atom::One, Index{}});
        }
    } else {
        throw std::invalid_argument("special_identity: unknown name '" + name + "'");
    }
    return out;
}

}  // namespace logsine
