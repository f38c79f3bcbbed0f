#pragma once

#include "logsine/index.hpp"
#include "logsine/symcombo.hpp"
#include "logsine/word.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace logsine {

enum class AtomTarget { Zeta, Li };

/// Linear extension of the Z / L dictionary over a word polynomial.
/// Z needs every term in H0, L needs H1; a violation signals a divergent
/// zeta or Li request.
inline SymCombo atoms_from_words(const WordPoly& p, AtomTarget target) {
    SymCombo out;
    for (auto& [w, c] : p.terms()) {
        if (w.empty()) {
            out += SymCombo::constant(GaussRat(c));
            continue;
        }
        Subspace sub = subspace_of(w);
        if (target == AtomTarget::Zeta) {
            if (sub != Subspace::H0)
                throw std::domain_error("atoms_from_words: word outside H0, zeta(" + w.str() + ") diverges");
            out += SymCombo::zeta(word_index(w), GaussRat(c));
        } else {
            if (sub == Subspace::Neither)
                throw std::domain_error("atoms_from_words: word outside H1: " + w.str());
            out += SymCombo::li(word_index(w), GaussRat(c));
        }
    }
    return out;
}

namespace detail {
/// Enumerate all j with j dominated by q (prefix sums bounded), in
/// lexicographic order, calling visit(j).
inline void for_each_dominated(const Index& q, const std::function<void(const Index&)>& visit) {
    int n = q.depth();
    Index j = Index::repeat(0, n);
    auto rec = [&](auto&& self, int u, long slack) -> void {
        // slack = sum_{v<u} (q_v - j_v)
        if (u == n) {
            visit(j);
            return;
        }
        for (int ju = 0; ju <= slack + q[u]; ++ju) {
            j[u] = ju;
            self(self, u + 1, slack + q[u] - ju);
        }
    };
    rec(rec, 0, 0);
}

inline SymCombo i_sigma_power(long e, const GaussRat& coeff) {
    return SymCombo::sigma_power((int)e, coeff * GaussRat::i_power(e));
}
}  // namespace detail

/// f_q^r(sigma): 1 when r is empty; B_q (i sigma)^{|q|+n} when r is all
/// zeros; otherwise B_{q'} sum_{j <= qbar} C_qbar^j (i sigma)^{|qbar|-|j|}
/// L(w_j^{r''}; e^{i sigma}).
inline SymCombo f_sym(const Index& q, const Index& r) {
    require_equal_depth(q, r, "f_sym");
    if (r.empty()) return SymCombo::one();
    if (r.all_zero()) return detail::i_sigma_power(q.weight() + q.depth(), GaussRat(b_coeff(q)));
    SplitQR s = split_pair(q, r);
    GaussRat bq(b_coeff(s.q_prime));
    long wbar = s.q_bar.weight();
    SymCombo out;
    detail::for_each_dominated(s.q_bar, [&](const Index& j) {
        GaussRat coeff = bq * GaussRat(c_coeff(s.q_bar, j));
        SymCombo li_part = atoms_from_words(w_word(j, s.r_dprime), AtomTarget::Li);
        out += detail::i_sigma_power(wbar - j.weight(), coeff) * li_part;
    });
    return out;
}

/// f_q^r(0): 1 when r is empty; 0 when r is all zeros; otherwise the
/// zeta combination of the remark following the definition of f. No sigma,
/// no pi, no Li atoms; coefficients real.
inline SymCombo f_zero(const Index& q, const Index& r) {
    require_equal_depth(q, r, "f_zero");
    if (r.empty()) return SymCombo::one();
    if (r.all_zero()) return SymCombo::zero();
    SplitQR s = split_pair(q, r);
    Rational bq = b_coeff(s.q_prime);
    long wbar = s.q_bar.weight();
    int rn = r.last();
    Index qbar_minus = s.q_bar.drop_last();
    Index rdp_minus = s.r_dprime.drop_last();
    SymCombo out;
    detail::for_each_dominated(qbar_minus, [&](const Index& jm) {
        long e = wbar - jm.weight();
        Rational coeff = bq * c_coeff(qbar_minus, jm) * Rational(factorial(e));
        if (e % 2) coeff = -coeff;
        WordPoly w = shuffle(w_word(jm, rdp_minus), e1_shuffle_power(rn)).append(Word::run(Letter::E0, 1 + (int)e));
        out += atoms_from_words(w, AtomTarget::Zeta).scaled(GaussRat(coeff));
    });
    return out;
}

/// F_q^r(sigma) = sum over aligned block partitions of
/// (-1)^{h-1} (prod_{j<h} f(0)) (f(sigma) - f(0)); F_empty^empty = 1.
/// Vanishes identically at sigma = 0 for depth >= 1.
inline SymCombo big_f_sym(const Index& q, const Index& r) {
    require_equal_depth(q, r, "big_f_sym");
    if (q.empty()) return SymCombo::one();
    SymCombo out;
    for (auto& part : block_partitions(q, r)) {
        size_t h = part.size();
        SymCombo term = SymCombo::one();
        for (size_t b = 0; b + 1 < h; ++b) term *= f_zero(part[b].first, part[b].second);
        auto& [qh, rh] = part[h - 1];
        term *= f_sym(qh, rh) - f_zero(qh, rh);
        if ((h - 1) % 2) term = -term;
        out += term;
    }
    return out;
}

/// The main reduction: Ls_k^l(sigma) as an exact combination of sigma and
/// pi powers, multiple zeta values and multiple polylogarithms at e^{i
/// sigma}, valid for sigma in [0, 2 pi]. Requires k_u - 1 - l_u >= 0.
inline SymCombo ls_closed_form(const Index& k, const Index& l) {
    require_equal_depth(k, l, "ls_closed_form");
    int n = k.depth();
    for (int u = 0; u < n; ++u)
        if (k[u] < 1 || l[u] < 0 || k[u] - 1 - l[u] < 0)
            throw std::domain_error("ls_closed_form: need k_u >= 1, 0 <= l_u <= k_u - 1");
    if (n == 0) return SymCombo::one();
    Index m = index_sub(index_sub(k, Index::ones(n)), l, true);
    GaussRat prefactor = GaussRat::i_power(l.weight() + n);
    if ((k.weight() + n) % 2) prefactor = -prefactor;
    SymCombo out;
    for (auto& [p, q, r] : compositions_triple(m)) {
        long wp = p.weight(), wq = q.weight();
        // (-i pi)^{|p|} / 2^{|p|+|q|} * multinomial
        GaussRat coeff = GaussRat::i_power(-wp) *
                         GaussRat(Rational(multinomial_product(m, p, q, r)) /
                                  Rational(integer_pow(Integer(2), wp + wq)));
        SymCombo factor = SymCombo::pi_power((int)wp, prefactor * coeff);
        out += factor * big_f_sym(index_add(q, l), r);
    }
    return out;
}

/// Depth-1 shortcut for Ls_k^{(k-2)}, k >= 2. Equals
/// ls_closed_form((k), (k-2)) exactly.
inline SymCombo ls_easy_depth1(int k) {
    if (k < 2) throw std::domain_error("ls_easy_depth1: k must be >= 2");
    SymCombo out;
    out += SymCombo::sigma_power(k, GaussRat::i_power(1) * GaussRat(Rational(1, 2 * k)));
    out += SymCombo::pi_power(1, GaussRat::i_power(1) * GaussRat(Rational(-1, 2 * (k - 1)))) *
           SymCombo::sigma_power(k - 1);
    out += SymCombo::zeta(Index{k}, GaussRat::i_power(k - 1) * GaussRat(Rational(factorial(k - 2))));
    for (int j = 0; j <= k - 2; ++j) {
        GaussRat c = GaussRat::i_power(j + 1) *
                     GaussRat(-Rational(factorial(k - 2)) / Rational(factorial(k - 2 - j)));
        out += SymCombo::sigma_power(k - 2 - j, c) * SymCombo::li(Index{j + 2});
    }
    return out;
}

/// Reflection sign: Ls_k^l(sigma) = (-1)^{|l|+n} Ls_k^l(-sigma).
inline int ls_reflect(const Index& k, const Index& l) {
    require_equal_depth(k, l, "ls_reflect");
    return (l.weight() + k.depth()) % 2 ? -1 : 1;
}

/// One term of the shift expansion: coeff * (2 m pi)^{pi_pow} Ls_k^l(sigma).
struct ShiftTerm {
    Rational coeff;
    int pi_pow = 0;
    Index k;
    Index l;
};

/// Ls_k^l(2 m pi, 2 m pi + sigma) = sum_{j <= l} (2 m pi)^{|j|}
/// binom(l, j) Ls_{k-j}^{l-j}(sigma), as a formal sum.
inline std::vector<ShiftTerm> ls_shift_expand(const Index& k, const Index& l, int m) {
    require_equal_depth(k, l, "ls_shift_expand");
    std::vector<ShiftTerm> out;
    int n = k.depth();
    Index j = Index::repeat(0, n);
    auto rec = [&](auto&& self, int u) -> void {
        if (u == n) {
            long wj = j.weight();
            ShiftTerm t;
            t.coeff = Rational(integer_pow(Integer(2 * m), wj) * binom_product(l, j));
            t.pi_pow = (int)wj;
            t.k = index_sub(k, j);
            t.l = index_sub(l, j);
            if (t.coeff != 0) out.push_back(std::move(t));
            return;
        }
        for (int ju = 0; ju <= l[u]; ++ju) {
            j[u] = ju;
            self(self, u + 1);
        }
    };
    rec(rec, 0);
    return out;
}

/// Ls_k^l(2 m pi), m >= 0, as a sigma-free, Li-free combination of pi
/// powers and zeta values. m = 0 gives 0 (depth >= 1) or 1 (empty index);
/// m = 1 substitutes sigma = 2 pi into the closed form; m >= 2 recurses
/// through the range decomposition and the shift identity.
inline SymCombo ls_at_2mpi(const Index& k, const Index& l, int m) {
    require_equal_depth(k, l, "ls_at_2mpi");
    if (m < 0) throw std::domain_error("ls_at_2mpi: m must be >= 0");
    int n = k.depth();
    if (n == 0) return SymCombo::one();
    if (m == 0) return SymCombo::zero();
    if (m == 1) return ls_closed_form(k, l).subst_sigma_2mpi(1);
    // Ls(2m pi) = sum_h Ls_{k_h}^{l_h}(2(m-1) pi) * Ls over (2(m-1) pi, 2m pi),
    // the second factor shift-expanded at sigma = 2 pi.
    SymCombo out;
    for (int h = 0; h <= n; ++h) {
        SymCombo head = ls_at_2mpi(k.prefix(h), l.prefix(h), m - 1);
        if (head.is_zero()) continue;
        SymCombo tail;
        for (auto& t : ls_shift_expand(k.suffix_from(h), l.suffix_from(h), m - 1))
            tail += SymCombo::pi_power(t.pi_pow, GaussRat(t.coeff)) * ls_at_2mpi(t.k, t.l, 1);
        out += head * tail;
    }
    return out;
}

/// Ls_k^l(sign (2 m pi + sigma)) for sigma in [0, 2 pi], m >= 0,
/// sign = +1 or -1, as a SymCombo in sigma, pi, zeta, Li(e^{i sigma}).
inline SymCombo ls_general(const Index& k, const Index& l, int m, int sign) {
    require_equal_depth(k, l, "ls_general");
    if (m < 0) throw std::domain_error("ls_general: m must be >= 0");
    if (sign != 1 && sign != -1) throw std::domain_error("ls_general: sign must be +1 or -1");
    int n = k.depth();
    SymCombo out;
    for (int h = 0; h <= n; ++h) {
        SymCombo head = ls_at_2mpi(k.prefix(h), l.prefix(h), m);
        if (head.is_zero()) continue;
        SymCombo tail;
        for (auto& t : ls_shift_expand(k.suffix_from(h), l.suffix_from(h), m))
            tail += SymCombo::pi_power(t.pi_pow, GaussRat(t.coeff)) * ls_closed_form(t.k, t.l);
        out += head * tail;
    }
    if (sign < 0 && ls_reflect(k, l) < 0) out = -out;
    return out;
}

/// SLs(k; sigma) = (-1)^n sum_{j <= k - 2_n} binom(k-2_n, j)
/// (-sigma)^{|k-2_n-j|} Ls_{j+2_n}^{j}(sigma), entries of k >= 2.
inline SymCombo sls_closed_form(const Index& k) {
    for (int u = 0; u < k.depth(); ++u)
        if (k[u] < 2) throw std::domain_error("sls_closed_form: entries must be >= 2");
    int n = k.depth();
    if (n == 0) return SymCombo::one();
    Index m = index_sub(k, Index::repeat(2, n), true);
    SymCombo out;
    Index j = Index::repeat(0, n);
    auto rec = [&](auto&& self, int u) -> void {
        if (u == n) {
            long e = m.weight() - j.weight();
            GaussRat c = GaussRat(Rational(binom_product(m, j)));
            if (e % 2) c = -c;
            out += SymCombo::sigma_power((int)e, c) *
                   ls_closed_form(index_add(j, Index::repeat(2, n)), j);
            return;
        }
        for (int ju = 0; ju <= m[u]; ++ju) {
            j[u] = ju;
            self(self, u + 1);
        }
    };
    rec(rec, 0);
    if (n % 2) out = -out;
    return out;
}

/// The interleavings of a and b preserving each factor's internal order
/// (with multiplicity): the index multiset of the SLs shuffle product.
inline std::vector<Index> sls_shuffle(const Index& a, const Index& b) {
    std::vector<Index> out;
    Index cur;
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i == a.depth() && j == b.depth()) {
            out.push_back(cur);
            return;
        }
        if (i < a.depth()) {
            cur.push_back(a[i]);
            self(self, i + 1, j);
            cur = cur.drop_last();
        }
        if (j < b.depth()) {
            cur.push_back(b[j]);
            self(self, i, j + 1);
            cur = cur.drop_last();
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Split a SymCombo into real and imaginary parts, rewriting each Li atom
/// through Cl/Gl by weight parity: even weight Li = Gl + i Cl, odd weight
/// Li = Cl + i Gl. sigma, pi and zeta atoms are real.
inline std::pair<CGCombo, CGCombo> cl_gl_split(const SymCombo& c) {
    CGCombo re, im;
    for (auto& [mon, coeff] : c.terms()) {
        CGMonomial base;
        base.sigma_pow = mon.sigma_pow;
        base.pi_pow = mon.pi_pow;
        base.zetas = mon.zetas;
        if (!mon.li) {
            re.add(base, coeff.re);
            im.add(base, coeff.im);
            continue;
        }
        bool even = (mon.li->weight() % 2 == 0);
        CGMonomial with_cl = base, with_gl = base;
        with_cl.cg = {CGKind::Cl, *mon.li};
        with_gl.cg = {CGKind::Gl, *mon.li};
        // (x + iy)(R + iI) with R/I the parity-selected real/imaginary atom
        const CGMonomial& real_atom = even ? with_gl : with_cl;
        const CGMonomial& imag_atom = even ? with_cl : with_gl;
        re.add(real_atom, coeff.re);
        re.add(imag_atom, -coeff.im);
        im.add(imag_atom, coeff.re);
        im.add(real_atom, coeff.im);
    }
    return {re, im};
}

}  // namespace logsine
