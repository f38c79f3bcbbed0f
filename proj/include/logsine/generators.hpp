#pragma once

#include "logsine/closed_form.hpp"
#include "logsine/eval.hpp"
#include "logsine/pslq.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace logsine {

enum class SetKind { Sprime, So, Se, Hoffman, Lo, Le, Mo, Me, No, Ne };

inline const char* set_kind_name(SetKind k) {
    switch (k) {
        case SetKind::Sprime: return "Sprime";
        case SetKind::So: return "So";
        case SetKind::Se: return "Se";
        case SetKind::Hoffman: return "Hoffman";
        case SetKind::Lo: return "Lo";
        case SetKind::Le: return "Le";
        case SetKind::Mo: return "Mo";
        case SetKind::Me: return "Me";
        case SetKind::No: return "No";
        case SetKind::Ne: return "Ne";
    }
    return "?";
}

inline SetKind parse_set_kind(const std::string& s) {
    for (SetKind k : {SetKind::Sprime, SetKind::So, SetKind::Se, SetKind::Hoffman, SetKind::Lo,
                      SetKind::Le, SetKind::Mo, SetKind::Me, SetKind::No, SetKind::Ne})
        if (s == set_kind_name(k)) return k;
    throw std::invalid_argument("unknown generator set kind: " + s);
}

/// A named real constant pi^{pi_pow} * SLs(index) (at pi/3) or
/// pi^{pi_pow} * zeta(index), a member of one of the generating sets.
struct ConstantExpr {
    enum class Atom { SLs, Zeta };
    int pi_pow = 0;
    Atom atom = Atom::SLs;
    Index index;  // SLs argument tuple (entries >= 2) or zeta index
    SetKind role = SetKind::Sprime;

    long weight() const { return pi_pow + index.weight(); }

    std::string name() const {
        std::string s;
        if (pi_pow == 1) s = "pi";
        if (pi_pow > 1) s = "pi^" + std::to_string(pi_pow);
        std::string a;
        if (atom == Atom::SLs) {
            if (!index.empty()) a = "SLs(" + index.str() + ")";
        } else {
            a = "zeta(" + index.str() + ")";
        }
        if (s.empty() && a.empty()) return "1";
        if (s.empty()) return a;
        if (a.empty()) return s;
        return s + "*" + a;
    }
};

/// Descriptor sigma^{sigma_pow} * Ls_k^l(sigma) for the L/M/N families.
struct LsGenerator {
    int sigma_pow = 0;
    Index k;
    Index l;

    long a_exponent_sum() const {
        long s = 0;
        for (int u = 0; u < k.depth(); ++u) s += k[u] - 1 - l[u];
        return s;
    }

    std::string name() const {
        std::string s;
        if (sigma_pow == 1) s = "s";
        if (sigma_pow > 1) s = "s^" + std::to_string(sigma_pow);
        std::string a = "Ls[" + k.str() + ";" + l.str() + "]";
        if (k.empty()) a = "Ls[]";
        return s.empty() ? a : s + "*" + a;
    }
};

/// A materialized generating set: the S/H kinds carry constants, the L/M/N
/// kinds carry integral descriptors.
struct GeneratorSet {
    SetKind kind = SetKind::Sprime;
    int k = 0;
    int d = 0;
    std::vector<ConstantExpr> constants;
    std::vector<LsGenerator> integrals;

    size_t size() const { return constants.size() + integrals.size(); }
};

namespace detail {

/// Compositions of total into exactly n parts with part_ok(p), lexicographic.
inline void for_each_composition(int total, int n, const std::function<bool(int)>& part_ok,
                                 const std::function<void(const Index&)>& visit) {
    Index c;
    auto rec = [&](auto&& self, int rem, int left) -> void {
        if (left == 0) {
            if (rem == 0) visit(c);
            return;
        }
        for (int p = 1; p <= rem; ++p) {
            if (!part_ok(p)) continue;
            c.push_back(p);
            self(self, rem - p, left - 1);
            c = c.drop_last();
        }
    };
    rec(rec, total, n);
}

}  // namespace detail

/// Exhaustive, duplicate-free enumeration of the named generating set.
/// S/H families are ordered by (depth, composition); L/M/N families by
/// (sigma power, depth, composition, shift tuple).
inline GeneratorSet gen_set(SetKind kind, int k, int d) {
    if (k < 0 || d < 0) throw std::domain_error("gen_set: k, d must be >= 0");
    GeneratorSet g;
    g.kind = kind;
    g.k = k;
    g.d = d;

    auto add_const = [&](int pi_pow, ConstantExpr::Atom atom, const Index& idx) {
        ConstantExpr e;
        e.pi_pow = pi_pow;
        e.atom = atom;
        e.index = idx;
        e.role = kind;
        g.constants.push_back(std::move(e));
    };

    switch (kind) {
        case SetKind::Sprime: {
            // pi^{2m} SLs(k_1..k_n), 2m + sum k = k, n <= d, parts odd >= 3
            for (int n = 0; n <= d; ++n)
                for (int t = 0; t <= k; ++t) {
                    if ((k - t) % 2) continue;
                    detail::for_each_composition(
                        t, n, [](int p) { return p >= 3 && p % 2 == 1; },
                        [&](const Index& c) { add_const(k - t, ConstantExpr::Atom::SLs, c); });
                }
            break;
        }
        case SetKind::So:
        case SetKind::Se: {
            bool odd = (kind == SetKind::So);
            for (int n = 0; n <= d; ++n) {
                if ((n % 2 == 1) != odd) continue;
                for (int t = 0; t <= k; ++t)
                    detail::for_each_composition(
                        t, n, [](int p) { return p >= 2; },
                        [&](const Index& c) { add_const(k - t, ConstantExpr::Atom::SLs, c); });
            }
            break;
        }
        case SetKind::Hoffman: {
            for (int n = 0; n <= k; ++n)
                detail::for_each_composition(
                    k, n, [](int p) { return p == 2 || p == 3; },
                    [&](const Index& c) {
                        int threes = 0;
                        for (int u = 0; u < c.depth(); ++u) threes += (c[u] == 3);
                        if (threes <= d) add_const(0, ConstantExpr::Atom::Zeta, c);
                    });
            break;
        }
        case SetKind::Lo:
        case SetKind::Le:
        case SetKind::Mo:
        case SetKind::Me:
        case SetKind::No:
        case SetKind::Ne: {
            bool odd = (kind == SetKind::Lo || kind == SetKind::Mo || kind == SetKind::No);
            bool with_sigma = (kind == SetKind::Mo || kind == SetKind::Me);
            bool strict = (kind != SetKind::Lo && kind != SetKind::Le);  // k_u >= 2, a_u >= 1
            int max_m = with_sigma ? k : 0;
            for (int m = 0; m <= max_m; ++m) {
                int t = k - m;
                for (int n = 0; n <= t; ++n)
                    detail::for_each_composition(
                        t, n, [&](int p) { return strict ? p >= 2 : p >= 1; },
                        [&](const Index& comp) {
                            // enumerate l tuples
                            Index l = Index::repeat(0, n);
                            auto rec = [&](auto&& self, int u, long asum) -> void {
                                if (asum > d) return;
                                if (u == n) {
                                    // remaining a-sum can only grow; prune handled per entry
                                    long total_a = 0;
                                    for (int v = 0; v < n; ++v) total_a += comp[v] - 1 - l[v];
                                    if (total_a > d) return;
                                    if ((total_a % 2 == 1) != odd) return;
                                    LsGenerator gen;
                                    gen.sigma_pow = m;
                                    gen.k = comp;
                                    gen.l = l;
                                    g.integrals.push_back(std::move(gen));
                                    return;
                                }
                                int amin = strict ? 1 : 0;
                                for (int a = amin; a <= comp[u] - 1; ++a) {
                                    l[u] = comp[u] - 1 - a;
                                    self(self, u + 1, asum + a);
                                }
                            };
                            rec(rec, 0, 0);
                        });
            }
            break;
        }
    }
    return g;
}

/// |gen_set(kind, k, d)| through the counting recurrences (fast path).
inline long long count_seq(SetKind kind, int k, int d) {
    if (k < 0 || d < 0) return 0;
    static std::map<std::tuple<SetKind, int, int>, long long> memo;
    auto key = std::make_tuple(kind, k, d);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long long v = 0;
    switch (kind) {
        case SetKind::Sprime:
            if (k == 0) v = 1;
            else if (k == 1) v = 0;
            else if (k == 2) v = 1;
            else if (d == 0) v = (k % 2 == 0) ? 1 : 0;
            else v = count_seq(kind, k - 2, d) + count_seq(kind, k - 3, d - 1);
            break;
        case SetKind::So:
            if (k <= 1) v = 0;
            else if (d == 0) v = 0;
            else v = count_seq(SetKind::So, k - 1, d) + count_seq(SetKind::Se, k - 2, d - 1);
            break;
        case SetKind::Se:
            if (k <= 1) v = 1;
            else if (d == 0) v = 1;
            else v = count_seq(SetKind::Se, k - 1, d) + count_seq(SetKind::So, k - 2, d - 1);
            break;
        case SetKind::Hoffman:
            if (k == 0) v = 1;
            else if (k == 1) v = 0;
            else v = count_seq(kind, k - 2, d) + (d >= 1 ? count_seq(kind, k - 3, d - 1) : 0);
            break;
        case SetKind::Lo:
            if (k <= 1) v = 0;
            else if (k == 2) v = (d >= 1) ? 1 : 0;
            else if (d == 0) v = 0;
            else
                v = 2 * count_seq(SetKind::Lo, k - 1, d) + count_seq(SetKind::Le, k - 1, d - 1) -
                    count_seq(SetKind::Le, k - 2, d - 1);
            break;
        case SetKind::Le:
            if (k <= 1) v = 1;
            else if (k == 2) v = 2;
            else if (d == 0) v = 1LL << (k - 1);
            else
                v = 2 * count_seq(SetKind::Le, k - 1, d) + count_seq(SetKind::Lo, k - 1, d - 1) -
                    count_seq(SetKind::Lo, k - 2, d - 1);
            break;
        case SetKind::Mo:
            if (k <= 1) v = 0;
            else if (d == 0) v = 0;
            else v = count_seq(SetKind::Mo, k - 1, d) + count_seq(SetKind::Me, k - 1, d - 1);
            break;
        case SetKind::Me:
            if (k <= 1) v = 1;
            else if (d == 0) v = 1;
            else v = count_seq(SetKind::Me, k - 1, d) + count_seq(SetKind::Mo, k - 1, d - 1);
            break;
        case SetKind::No:
            v = (k == 0) ? 0 : count_seq(SetKind::Mo, k, d) - count_seq(SetKind::Mo, k - 1, d);
            break;
        case SetKind::Ne:
            v = (k == 0) ? 1 : count_seq(SetKind::Me, k, d) - count_seq(SetKind::Me, k - 1, d);
            break;
    }
    memo[key] = v;
    return v;
}

/// Zagier's conjectured dimension of the weight-k MZV space.
inline long long zagier_dim(int k) {
    if (k < 0) return 0;
    std::vector<long long> dvals = {1, 0, 1};
    for (int i = 3; i <= k; ++i) dvals.push_back(dvals[i - 2] + dvals[i - 3]);
    return dvals[k];
}

inline long long fibonacci(int n) {
    if (n <= 0) return 0;
    long long a = 1, b = 1;  // F_1, F_2
    for (int i = 3; i <= n; ++i) {
        long long c = a + b;
        a = b;
        b = c;
    }
    return n == 1 ? 1 : b;
}

struct IRW {
    long long I = 0, R = 0, W = 0;
};

/// The Borwein--Broadhurst--Kamnitzer dimension sequences; W(k) = F_{k+1}
/// is verified internally.
inline IRW irw_dims(int k) {
    if (k < 0) throw std::domain_error("irw_dims: negative k");
    std::vector<long long> I = {0, 0}, R = {1, 1};
    for (int i = 2; i <= k; ++i) {
        I.push_back(I[i - 1] + R[i - 2]);
        R.push_back(R[i - 1] + I[i - 2]);
    }
    IRW out;
    out.I = I[k];
    out.R = R[k];
    out.W = out.I + out.R;
    if (out.W != fibonacci(k + 1)) throw std::logic_error("irw_dims: W(k) != F_{k+1}");
    return out;
}

/// Numeric value of a generating-set constant (SLs routed through the
/// closed form; zeta through the MZV evaluator).
inline Real eval_constant_expr(const ConstantExpr& e, const EvalContext& ctx) {
    PrecisionGuard guard(ctx.work_digits());
    Real v = real_pow_int(pi_value(), e.pi_pow);
    if (e.atom == ConstantExpr::Atom::SLs) {
        if (!e.index.empty()) {
            BigComplex s = combo_eval(sls_closed_form(e.index), SigmaToken::pi_multiple(Rational(1, 3)), ctx);
            v *= s.re;
        }
    } else {
        v *= mzv_eval(e.index, ctx);
    }
    return v;
}

/// The union of S'_{w,w} over w <= max_weight: the weight <= max_weight
/// slice of the conjecturally independent family.
inline std::vector<ConstantExpr> sprime_union(int max_weight) {
    std::vector<ConstantExpr> out;
    for (int w = 0; w <= max_weight; ++w) {
        GeneratorSet g = gen_set(SetKind::Sprime, w, w);
        out.insert(out.end(), g.constants.begin(), g.constants.end());
    }
    return out;
}

struct ScanResult {
    std::vector<std::string> names;
    RelationReport report;
};

/// PSLQ scan over a list of constants with precision escalation up to
/// max precision (single rung when ladder has one entry).
inline ScanResult scan_constants(const std::vector<ConstantExpr>& exprs, const std::vector<int>& precision_ladder,
                                 const Integer& height_bound) {
    if (exprs.size() < 2) throw std::invalid_argument("scan_constants: need at least two constants");
    ScanResult out;
    for (auto& e : exprs) out.names.push_back(e.name());
    for (size_t rung = 0; rung < precision_ladder.size(); ++rung) {
        int prec = precision_ladder[rung];
        EvalContext ctx;
        ctx.precision_digits = prec;
        PrecisionGuard guard(ctx.work_digits());
        std::vector<Real> values;
        values.reserve(exprs.size());
        for (auto& e : exprs) values.push_back(eval_constant_expr(e, ctx));
        out.report = integer_relation(values, prec, height_bound);
        if (out.report.found()) return out;
        if (out.report.certified_height >= height_bound) return out;
    }
    return out;
}

/// Searches for a rational expression of target over a generating set:
/// runs PSLQ on {target} followed by the basis values. A relation with a
/// nonzero leading coefficient expresses the target.
inline ScanResult express_target(const std::string& target_name, const Real& target_value,
                                 const GeneratorSet& basis, int precision, const Integer& height_bound) {
    if (!basis.integrals.empty())
        throw std::invalid_argument("express_target: basis must be a constant set (S/H kinds)");
    ScanResult out;
    out.names.push_back(target_name);
    EvalContext ctx;
    ctx.precision_digits = precision;
    PrecisionGuard guard(ctx.work_digits());
    std::vector<Real> values = {target_value};
    for (auto& e : basis.constants) {
        out.names.push_back(e.name());
        values.push_back(eval_constant_expr(e, ctx));
    }
    out.report = integer_relation(values, precision, height_bound);
    if (out.report.found() && (*out.report.coeffs)[0] == 0) {
        // relation among basis elements only; not an expression of target
        out.report.coeffs.reset();
        out.report.precision_exhausted = false;
    }
    return out;
}

}  // namespace logsine
