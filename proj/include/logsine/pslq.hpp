#pragma once

#include "logsine/bigfloat.hpp"
#include "logsine/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace logsine {

/// Outcome of an integer-relation search. When coeffs is present,
/// sum coeffs[i] * values[i] vanishes to within the reported residual at
/// the stated precision. When absent, no relation with coefficient height
/// up to certified_height exists at that precision; this is always a
/// precision-qualified statement, never an unconditional independence claim.
struct RelationReport {
    std::optional<std::vector<Integer>> coeffs;
    int precision = 0;
    Integer requested_height{0};
    Integer certified_height{0};
    std::string residual;
    long iterations = 0;
    bool precision_exhausted = false;

    bool found() const { return coeffs.has_value(); }
};

namespace pslq_detail {

inline Real residual_of(const std::vector<Real>& x, const std::vector<Integer>& c) {
    Real acc(0);
    for (size_t i = 0; i < x.size(); ++i) acc += to_real(Rational(c[i])) * x[i];
    return abs(acc);
}

inline Integer height_of(const std::vector<Integer>& c) {
    Integer h = 0;
    for (auto& v : c)
        if (abs(v) > h) h = abs(v);
    return h;
}

}  // namespace pslq_detail

/// Standard one-level PSLQ on real values. Runs at precision_digits
/// (callers supply values computed at that precision or better) and
/// searches until either a relation is detected and verified, the norm
/// exclusion bound clears height_bound, or precision is exhausted.
inline RelationReport integer_relation(const std::vector<Real>& values, int precision_digits,
                                       const Integer& height_bound) {
    const int n = (int)values.size();
    if (n < 2) throw std::invalid_argument("integer_relation: need at least two values");
    PrecisionGuard guard(precision_digits + 25);

    RelationReport rep;
    rep.precision = precision_digits;
    rep.requested_height = height_bound;

    Real max_abs_x(0);
    for (auto& v : values) max_abs_x = std::max(max_abs_x, abs(v));
    if (max_abs_x == 0) throw std::invalid_argument("integer_relation: all values zero");

    // Detection fires when a y entry drops below eps_detect; a candidate is
    // accepted only if its residual lands a further 8 digits down. True
    // relations collapse to the accuracy floor of the input values, while
    // near-relations sit at the detection threshold, inside the gap.
    const Real eps_detect = pow(Real(10), -(precision_digits - 10));
    const Real eps_accept = pow(Real(10), -(precision_digits - 2)) * max_abs_x;
    const Real eps_exhaust = pow(Real(10), -(precision_digits + 15));
    const Real gamma = sqrt(Real(2));

    // Normalize input and build the initial H matrix.
    std::vector<Real> y(n);
    {
        std::vector<Real> s(n + 1, Real(0));
        Real acc(0);
        for (int j = n - 1; j >= 0; --j) {
            acc += values[j] * values[j];
            s[j] = sqrt(acc);
        }
        for (int j = 0; j < n; ++j) y[j] = values[j] / s[0];
        std::vector<std::vector<Real>> H(n, std::vector<Real>(n - 1, Real(0)));
        for (int j = 0; j < n - 1; ++j) {
            H[j][j] = s[j + 1] / s[j];
            for (int i = j + 1; i < n; ++i) H[i][j] = -(values[i] / s[0]) * (values[j] / s[0]) / ((s[j] / s[0]) * (s[j + 1] / s[0]));
        }
        // integer matrices: relation is read off a column of B
        std::vector<std::vector<Integer>> A(n, std::vector<Integer>(n, 0)), B(n, std::vector<Integer>(n, 0));
        for (int i = 0; i < n; ++i) A[i][i] = B[i][i] = 1;

        auto reduce_entry = [&](int i, int j) {
            if (H[j][j] == 0) return;
            Real q = H[i][j] / H[j][j];
            Integer t;
            {
                Real rq = round(q);
                t = rq.convert_to<Integer>();
            }
            if (t == 0) return;
            Real rt = to_real(Rational(t));
            y[j] += rt * y[i];
            for (int k = 0; k <= j; ++k) H[i][k] -= rt * H[j][k];
            for (int k = 0; k < n; ++k) {
                A[i][k] -= t * A[j][k];
                B[k][j] += t * B[k][i];
            }
        };
        auto full_reduce = [&]() {
            for (int i = 1; i < n; ++i)
                for (int j = i - 1; j >= 0; --j) reduce_entry(i, j);
        };
        full_reduce();

        Real best_bound(0);
        long iter = 0;
        const long max_iter = 200000L + 2000L * n * n;
        auto finish_none = [&](bool exhausted) {
            rep.coeffs.reset();
            rep.iterations = iter;
            rep.precision_exhausted = exhausted;
            // all relations have 2-norm >= best_bound, hence height >= bound/sqrt(n)
            Real hb = best_bound / sqrt(Real(n));
            Integer certified = floor(hb).convert_to<Integer>();
            if (certified < 0) certified = 0;
            rep.certified_height = certified < height_bound ? certified : height_bound;
            rep.residual = "";
            return rep;
        };

        while (true) {
            ++iter;
            // pivot row maximizing gamma^i |H_ii|
            int m = 0;
            {
                Real best(-1), g(1);
                for (int i = 0; i < n - 1; ++i) {
                    g *= gamma;
                    Real v = g * abs(H[i][i]);
                    if (v > best) {
                        best = v;
                        m = i;
                    }
                }
            }
            std::swap(y[m], y[m + 1]);
            std::swap(A[m], A[m + 1]);
            std::swap(H[m], H[m + 1]);
            for (int k = 0; k < n; ++k) std::swap(B[k][m], B[k][m + 1]);

            if (m < n - 2) {
                Real t0 = sqrt(H[m][m] * H[m][m] + H[m][m + 1] * H[m][m + 1]);
                if (t0 != 0) {
                    Real t1 = H[m][m] / t0, t2 = H[m][m + 1] / t0;
                    for (int i = m; i < n; ++i) {
                        Real h3 = H[i][m], h4 = H[i][m + 1];
                        H[i][m] = t1 * h3 + t2 * h4;
                        H[i][m + 1] = -t2 * h3 + t1 * h4;
                    }
                }
            }
            full_reduce();

            Real hmax(0);
            for (int j = 0; j < n - 1; ++j) hmax = std::max(hmax, abs(H[j][j]));
            if (hmax > 0 && Real(1) / hmax > best_bound) best_bound = Real(1) / hmax;

            // detection
            int which = -1;
            Real ymin(0);
            for (int i = 0; i < n; ++i) {
                Real a = abs(y[i]);
                if (which < 0 || a < ymin) {
                    ymin = a;
                    which = i;
                }
            }
            if (ymin < eps_detect) {
                std::vector<Integer> c(n);
                for (int k = 0; k < n; ++k) c[k] = B[k][which];
                // strip the overall sign: first nonzero coefficient positive
                for (auto& v : c) {
                    if (v == 0) continue;
                    if (v < 0)
                        for (auto& w : c) w = -w;
                    break;
                }
                Real res = pslq_detail::residual_of(values, c);
                Integer h = pslq_detail::height_of(c);
                if (res <= eps_accept && h > 0 && h <= height_bound) {
                    rep.coeffs = std::move(c);
                    rep.iterations = iter;
                    rep.certified_height = 0;
                    rep.residual = res.str(6);
                    return rep;
                }
                // a y entry collapsed without a verifiable in-bound relation
                return finish_none(true);
            }
            if (ymin < eps_exhaust) return finish_none(true);
            {
                Real target = to_real(Rational(height_bound)) * sqrt(Real(n));
                if (best_bound > target) return finish_none(false);
            }
            if (iter >= max_iter) return finish_none(true);
        }
    }
}

}  // namespace logsine
