#pragma once

#include "logsine/rational.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <sstream>
#include <string>
#include <vector>

namespace logsine {

/// A finite tuple of integers: exponent tuples k, shift tuples l, and the
/// auxiliary tuples p, q, r, j of the composition sums. Entries are stored
/// in the order written, k_1 first (k_1 is the innermost integration
/// variable; the last entry carries the admissibility condition).
class Index {
public:
    Index() = default;
    explicit Index(std::vector<int> entries) : e_(std::move(entries)) {}
    Index(std::initializer_list<int> entries) : e_(entries) {}

    static Index repeat(int value, int n) { return Index(std::vector<int>(n, value)); }
    static Index ones(int n) { return repeat(1, n); }

    int depth() const { return (int)e_.size(); }
    bool empty() const { return e_.empty(); }
    long weight() const {
        long w = 0;
        for (int v : e_) w += v;
        return w;
    }
    bool admissible() const {
        for (int v : e_)
            if (v < 1) return false;
        return e_.empty() || e_.back() >= 2;
    }

    int operator[](int i) const { return e_[i]; }
    int& operator[](int i) { return e_[i]; }
    int last() const { return e_.back(); }
    const std::vector<int>& entries() const { return e_; }

    Index drop_last() const {
        if (e_.empty()) throw std::domain_error("Index::drop_last on empty index");
        return Index(std::vector<int>(e_.begin(), e_.end() - 1));
    }
    Index prefix(int h) const { return Index(std::vector<int>(e_.begin(), e_.begin() + h)); }
    Index suffix_from(int h) const { return Index(std::vector<int>(e_.begin() + h, e_.end())); }
    Index slice(int from, int to) const { return Index(std::vector<int>(e_.begin() + from, e_.begin() + to)); }
    void push_back(int v) { e_.push_back(v); }

    bool all_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
    }
    bool all_nonneg() const {
        return std::all_of(e_.begin(), e_.end(), [](int v) { return v >= 0; });
    }

    // Total order: depth first, then entries lexicographically. Used for the
    // canonical zeta-multiset sort and all map keys.
    friend std::strong_ordering operator<=>(const Index& a, const Index& b) {
        if (a.depth() != b.depth()) return a.depth() <=> b.depth();
        return a.e_ <=> b.e_;
    }
    friend bool operator==(const Index& a, const Index& b) = default;

    /// Text form: comma-separated entries, empty index is the empty string.
    std::string str() const {
        std::ostringstream os;
        for (size_t i = 0; i < e_.size(); ++i) {
            if (i) os << ',';
            os << e_[i];
        }
        return os.str();
    }

    static Index parse(const std::string& s) {
        Index out;
        if (s.empty()) return out;
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("Index::parse: empty component in '" + s + "'");
            out.e_.push_back(std::stoi(tok));
        }
        return out;
    }

private:
    std::vector<int> e_;
};

inline long weight(const Index& x) { return x.weight(); }
inline int depth(const Index& x) { return x.depth(); }
inline bool admissible(const Index& x) { return x.admissible(); }

inline void require_equal_depth(const Index& a, const Index& b, const char* where) {
    if (a.depth() != b.depth())
        throw std::invalid_argument(std::string(where) + ": depth mismatch (" + std::to_string(a.depth()) +
                                    " vs " + std::to_string(b.depth()) + ")");
}

inline Index index_add(const Index& a, const Index& b) {
    require_equal_depth(a, b, "index_add");
    Index r = a;
    for (int i = 0; i < r.depth(); ++i) r[i] += b[i];
    return r;
}

/// Componentwise difference. With require_nonneg, a negative entry is an
/// error rather than being clamped.
inline Index index_sub(const Index& a, const Index& b, bool require_nonneg = false) {
    require_equal_depth(a, b, "index_sub");
    Index r = a;
    for (int i = 0; i < r.depth(); ++i) {
        r[i] -= b[i];
        if (require_nonneg && r[i] < 0)
            throw std::domain_error("index_sub: negative entry in nonnegative context");
    }
    return r;
}

/// prod_u m_u! / (p_u! q_u! r_u!) with p+q+r = m componentwise.
inline Integer multinomial_product(const Index& m, const Index& p, const Index& q, const Index& r) {
    require_equal_depth(m, p, "multinomial_product");
    require_equal_depth(m, q, "multinomial_product");
    require_equal_depth(m, r, "multinomial_product");
    Integer out = 1;
    for (int u = 0; u < m.depth(); ++u) {
        if (p[u] < 0 || q[u] < 0 || r[u] < 0 || p[u] + q[u] + r[u] != m[u])
            throw std::domain_error("multinomial_product: p+q+r != m or negative entry");
        out *= factorial(m[u]) / (factorial(p[u]) * factorial(q[u]) * factorial(r[u]));
    }
    return out;
}

/// prod_u binom(l_u, j_u), requiring 0 <= j <= l componentwise.
inline Integer binom_product(const Index& l, const Index& j) {
    require_equal_depth(l, j, "binom_product");
    Integer out = 1;
    for (int u = 0; u < l.depth(); ++u) {
        if (j[u] < 0 || j[u] > l[u]) throw std::domain_error("binom_product: j outside [0, l]");
        out *= binomial(l[u], j[u]);
    }
    return out;
}

/// j_u <= q_u for every u.
inline bool leq_componentwise(const Index& j, const Index& q) {
    require_equal_depth(j, q, "leq_componentwise");
    for (int u = 0; u < j.depth(); ++u)
        if (j[u] > q[u]) return false;
    return true;
}

/// Dominance order: every prefix sum of j bounded by that of q.
/// Empty <= empty holds.
inline bool leq_dominance(const Index& j, const Index& q) {
    require_equal_depth(j, q, "leq_dominance");
    long sj = 0, sq = 0;
    for (int u = 0; u < j.depth(); ++u) {
        sj += j[u];
        sq += q[u];
        if (sj > sq) return false;
    }
    return true;
}

/// All componentwise-nonnegative triples (p, q, r) with p+q+r = m,
/// enumerated lexicographically in (p_1, q_1, p_2, q_2, ...).
inline std::vector<std::array<Index, 3>> compositions_triple(const Index& m) {
    if (!m.all_nonneg()) throw std::domain_error("compositions_triple: negative entry");
    std::vector<std::array<Index, 3>> out;
    int n = m.depth();
    Index p = Index::repeat(0, n), q = Index::repeat(0, n), r = Index::repeat(0, n);
    auto rec = [&](auto&& self, int u) -> void {
        if (u == n) {
            out.push_back({p, q, r});
            return;
        }
        for (int pu = 0; pu <= m[u]; ++pu)
            for (int qu = 0; qu + pu <= m[u]; ++qu) {
                p[u] = pu;
                q[u] = qu;
                r[u] = m[u] - pu - qu;
                self(self, u + 1);
            }
    };
    rec(rec, 0);
    return out;
}

/// B_q = B_{q-} / (|q| + n), B_empty = 1.
inline Rational b_coeff(const Index& q) {
    if (!q.all_nonneg()) throw std::domain_error("b_coeff: negative entry");
    Rational b = 1;
    long partial = 0;
    for (int u = 0; u < q.depth(); ++u) {
        partial += q[u];
        b /= Rational(partial + u + 1);
    }
    return b;
}

/// C_q^j = (-1)^{j_n} (|q|-|j-|)! / (|q|-|j|)! C_{q-}^{j-}, C_empty^empty = 1.
/// Requires j dominated by q so the factorial arguments stay nonnegative.
inline Rational c_coeff(const Index& q, const Index& j) {
    require_equal_depth(q, j, "c_coeff");
    if (!leq_dominance(j, q)) throw std::domain_error("c_coeff: j not dominated by q");
    Rational c = 1;
    long wq = 0, wj = 0;
    for (int u = 0; u < q.depth(); ++u) {
        wq += q[u];
        long wj_prev = wj;
        wj += j[u];
        Rational f = Rational(factorial(wq - wj_prev)) / Rational(factorial(wq - wj));
        if (j[u] % 2) f = -f;
        c *= f;
    }
    return c;
}

/// The (q', q'', r'', qbar) split of a pair (q, r): r' is the maximal
/// leading run of zeros of r, and qbar = (|q'| + n' + q''_1, q''_2, ...).
struct SplitQR {
    Index q_prime;
    Index q_dprime;
    Index r_dprime;
    Index q_bar;
};

inline SplitQR split_pair(const Index& q, const Index& r) {
    require_equal_depth(q, r, "split_pair");
    int n = q.depth();
    int np = 0;
    while (np < n && r[np] == 0) ++np;
    SplitQR s;
    s.q_prime = q.prefix(np);
    s.q_dprime = q.suffix_from(np);
    s.r_dprime = r.suffix_from(np);
    if (!s.q_dprime.empty()) {
        std::vector<int> bar;
        bar.push_back((int)s.q_prime.weight() + np + s.q_dprime[0]);
        for (int u = 1; u < s.q_dprime.depth(); ++u) bar.push_back(s.q_dprime[u]);
        s.q_bar = Index(std::move(bar));
    }
    return s;
}

/// One aligned cut of (q, r) into h >= 1 consecutive nonempty blocks.
using BlockPartition = std::vector<std::pair<Index, Index>>;

/// All 2^{n-1} aligned block partitions, ordered by ascending cut mask
/// (bit i of the mask set = cut after position i).
inline std::vector<BlockPartition> block_partitions(const Index& q, const Index& r) {
    require_equal_depth(q, r, "block_partitions");
    int n = q.depth();
    if (n == 0) throw std::domain_error("block_partitions: empty input");
    std::vector<BlockPartition> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        BlockPartition part;
        int start = 0;
        for (int i = 0; i < n; ++i) {
            bool cut = (i == n - 1) || (mask >> i) & 1u;
            if (cut) {
                part.emplace_back(q.slice(start, i + 1), r.slice(start, i + 1));
                start = i + 1;
            }
        }
        out.push_back(std::move(part));
    }
    return out;
}

}  // namespace logsine
