#pragma once

#include "logsine/bigfloat.hpp"
#include "logsine/index.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <vector>

namespace logsine {

/// Result of a brute-force quadrature of a defining integral. The error
/// estimate is the difference between the two finest refinement levels.
struct QuadResult {
    BigComplex value;
    double error_estimate = 0;
    long evaluations = 0;
    bool converged = true;
};

namespace quad {

using LD = long double;
using CLD = std::complex<long double>;

inline LD log_sine_a(LD theta) { return std::log(std::fabs(2.0L * std::sin(theta / 2))); }

template <class T>
T pow_int(T base, int e) {
    T r = T(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

/// Ascending mesh over [lo, hi] with geometric grading toward the
/// logarithmic singularities of A at multiples of 2 pi. Panels whose
/// closure touches a singular point are flagged null: their contribution
/// is below the grading floor and the integrand must not be sampled there.
struct Mesh {
    std::vector<LD> pts;
    std::vector<bool> null_panel;  // size pts.size()-1
};

inline Mesh build_mesh(LD lo, LD hi, int grade_levels) {
    const LD two_pi = 2.0L * 3.14159265358979323846264338327950288L;
    std::vector<LD> base = {lo, hi};
    std::vector<LD> singular;
    for (long j = (long)std::floor(lo / two_pi) - 1; j <= (long)std::ceil(hi / two_pi) + 1; ++j) {
        LD s = j * two_pi;
        if (s > lo && s < hi) base.push_back(s);
        if (s >= lo && s <= hi) singular.push_back(s);
    }
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    // cap panel length so interior panels resolve well
    std::vector<LD> capped;
    for (size_t i = 0; i + 1 < base.size(); ++i) {
        capped.push_back(base[i]);
        LD len = base[i + 1] - base[i];
        int pieces = (int)std::ceil((double)(len / 1.0L));
        for (int p = 1; p < pieces; ++p) capped.push_back(base[i] + len * p / pieces);
    }
    capped.push_back(base.back());

    auto is_singular = [&](LD x) {
        for (LD s : singular)
            if (std::fabs((double)(x - s)) < 1e-300) return true;
        return false;
    };

    std::vector<LD> pts;
    for (size_t i = 0; i + 1 < capped.size(); ++i) {
        LD a = capped[i], b = capped[i + 1];
        pts.push_back(a);
        bool sing_a = is_singular(a), sing_b = is_singular(b);
        if (sing_a && sing_b) {
            // grade toward both ends from the midpoint
            LD mid = (a + b) / 2;
            for (int v = 1; v <= grade_levels; ++v) pts.push_back(a + (mid - a) * std::exp2l((LD)-v));
            for (int v = grade_levels; v >= 1; --v) pts.push_back(b - (b - mid) * std::exp2l((LD)-v));
        } else if (sing_a) {
            for (int v = grade_levels; v >= 1; --v) pts.push_back(a + (b - a) * std::exp2l((LD)-v));
        } else if (sing_b) {
            for (int v = 1; v <= grade_levels; ++v) pts.push_back(b - (b - a) * std::exp2l((LD)-v));
        }
    }
    pts.push_back(capped.back());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Mesh m;
    m.pts = pts;
    m.null_panel.resize(pts.size() - 1, false);
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (is_singular(pts[i]) || is_singular(pts[i + 1])) m.null_panel[i] = true;
    return m;
}

/// Chebyshev machinery on [-1, 1] with Lobatto nodes x_j = cos(j pi / N).
inline const std::vector<double>& cheb_nodes(int n_nodes) {
    static std::map<int, std::vector<double>> cache;
    auto& v = cache[n_nodes];
    if (v.empty()) {
        for (int j = 0; j <= n_nodes; ++j) v.push_back(std::cos(M_PI * j / n_nodes));
    }
    return v;
}

template <class T>
std::vector<T> cheb_coeffs(const std::vector<T>& fvals) {
    int n = (int)fvals.size() - 1;
    std::vector<T> c(n + 1, T(0));
    for (int k = 0; k <= n; ++k) {
        T acc = T(0.5L) * (fvals[0] + (k % 2 ? T(-1) : T(1)) * fvals[n]);
        for (int j = 1; j < n; ++j) acc += fvals[j] * T((LD)std::cos(M_PI * j * k / n));
        c[k] = T(2.0L / n) * acc;
    }
    c[0] *= T(0.5L);
    c[n] *= T(0.5L);
    return c;
}

/// Antiderivative coefficients with P(-1) = 0, scaled for a panel of
/// half-width h.
template <class T>
std::vector<T> cheb_antiderivative(const std::vector<T>& b, LD h) {
    int n = (int)b.size() - 1;
    std::vector<T> a(n + 2, T(0));
    for (int k = 1; k <= n + 1; ++k) {
        T lo = (k - 1 == 0) ? T(2) * b[0] : (k - 1 <= n ? b[k - 1] : T(0));
        T hi_ = (k + 1 <= n) ? b[k + 1] : T(0);
        a[k] = (lo - hi_) * T(h / (2.0L * k));
    }
    T at_m1 = T(0);
    for (int k = 1; k <= n + 1; ++k) at_m1 += (k % 2 ? T(-1) : T(1)) * a[k];
    a[0] = -at_m1;
    return a;
}

template <class T>
T cheb_eval(const std::vector<T>& c, LD x) {
    // Clenshaw
    T b1 = T(0), b2 = T(0);
    for (int k = (int)c.size() - 1; k >= 1; --k) {
        T b0 = T(2 * x) * b1 - b2 + c[k];
        b2 = b1;
        b1 = b0;
    }
    return T(x) * b1 - b2 + c[0];
}

/// A piecewise-Chebyshev antiderivative G(x) = int_0^x f on a shared mesh.
template <class T>
struct PanelFn {
    const Mesh* mesh = nullptr;
    std::vector<std::vector<T>> anti;  // per panel; empty for null panels
    std::vector<T> cum;                // cumulative integral at each breakpoint, anchored at 0
    long* evals = nullptr;

    void build(const Mesh& m, const std::function<T(LD)>& f, int n_nodes, long* counter) {
        mesh = &m;
        evals = counter;
        size_t np = m.pts.size() - 1;
        anti.assign(np, {});
        std::vector<T> panel_int(np, T(0));
        const auto& nodes = cheb_nodes(n_nodes);
        for (size_t i = 0; i < np; ++i) {
            if (m.null_panel[i]) continue;
            LD a = m.pts[i], b = m.pts[i + 1];
            LD mid = (a + b) / 2, h = (b - a) / 2;
            std::vector<T> fv(n_nodes + 1);
            for (int j = 0; j <= n_nodes; ++j) {
                fv[j] = f(mid + h * (LD)nodes[j]);
                ++*counter;
            }
            auto c = cheb_coeffs(fv);
            anti[i] = cheb_antiderivative(c, h);
            panel_int[i] = cheb_eval(anti[i], 1.0L);
        }
        cum.assign(m.pts.size(), T(0));
        for (size_t i = 0; i < np; ++i) cum[i + 1] = cum[i] + panel_int[i];
        // anchor at x = 0 (always a mesh point: an end of the base interval)
        T shift = value_at_breakpoint_zero();
        for (auto& v : cum) v -= shift;
    }

    T value_at_breakpoint_zero() const {
        for (size_t i = 0; i < mesh->pts.size(); ++i)
            if (mesh->pts[i] == 0.0L) return cum[i];
        // fall back: nearest point to zero
        size_t best = 0;
        for (size_t i = 1; i < mesh->pts.size(); ++i)
            if (std::fabs((double)mesh->pts[i]) < std::fabs((double)mesh->pts[best])) best = i;
        return cum[best];
    }

    T operator()(LD x) const {
        const auto& pts = mesh->pts;
        if (x <= pts.front()) return cum.front();
        if (x >= pts.back()) return cum.back();
        size_t i = std::upper_bound(pts.begin(), pts.end(), x) - pts.begin() - 1;
        if (mesh->null_panel[i]) {
            // below the grading floor; the cumulative value at the nearer
            // regular edge is accurate to the floor
            LD a = pts[i], b = pts[i + 1];
            return (x - a < b - x) ? cum[i] : cum[i + 1];
        }
        LD a = pts[i], b = pts[i + 1];
        LD xi = (2 * x - a - b) / (b - a);
        return cum[i] + cheb_eval(anti[i], xi);
    }
};

/// One full cascade pass: G_u(theta) = int_0^theta w_u(t) G_{u-1}(t) dt,
/// where w_u is the level-u weight factor. Returns G_n(sigma).
template <class T>
T cascade(LD sigma, int depth, const std::function<T(int, LD)>& weight, int n_nodes, int grade_levels,
          long* evals) {
    LD lo = std::min((LD)0, sigma), hi = std::max((LD)0, sigma);
    Mesh mesh = build_mesh(lo, hi, grade_levels);
    PanelFn<T> prev;
    for (int u = 1; u <= depth; ++u) {
        PanelFn<T> cur;
        if (u == 1) {
            cur.build(mesh, [&](LD t) { return weight(1, t); }, n_nodes, evals);
        } else {
            PanelFn<T> keep = std::move(prev);
            cur.build(mesh, [&, kp = std::move(keep)](LD t) { return weight(u, t) * kp(t); }, n_nodes,
                      evals);
            prev = {};  // moved away
        }
        prev = std::move(cur);
    }
    if (depth == 0) return T(1);
    return prev(sigma);
}

template <class T>
QuadResult run_refinements(LD sigma, int depth, const std::function<T(int, LD)>& weight,
                           int target_digits) {
    struct Level {
        int nodes, grading;
    };
    const Level levels[3] = {{24, 72}, {34, 96}, {46, 124}};
    long evals = 0;
    T vals[3];
    for (int i = 0; i < 3; ++i)
        vals[i] = cascade<T>(sigma, depth, weight, levels[i].nodes, levels[i].grading, &evals);
    auto dist = [](const T& a, const T& b) { return (double)std::abs(CLD(a) - CLD(b)); };
    double err = dist(vals[2], vals[1]);
    double scale = std::max(1.0, (double)std::abs(CLD(vals[2])));
    err = std::max(err, 1e-18 * scale);
    QuadResult r;
    CLD v = CLD(vals[2]);
    r.value = BigComplex(Real((double)v.real()), Real((double)v.imag()));
    // keep the long double tail
    r.value.re += Real((double)(v.real() - (double)v.real()));
    r.value.im += Real((double)(v.imag() - (double)v.imag()));
    r.error_estimate = err;
    r.evaluations = evals;
    r.converged = err <= std::pow(10.0, -target_digits) * scale;
    return r;
}

}  // namespace quad

/// Direct adaptive quadrature of the defining nested integral of
/// Ls_k^l(sigma), never consulting the symbolic engine. Oracle scale:
/// target_digits <= 15.
inline QuadResult ls_quad(const Index& k, const Index& l, long double sigma, int target_digits = 12) {
    require_equal_depth(k, l, "ls_quad");
    int n = k.depth();
    for (int u = 0; u < n; ++u)
        if (k[u] - 1 - l[u] < 0 || l[u] < 0)
            throw std::domain_error("ls_quad: need k_u - 1 - l_u >= 0 and l_u >= 0");
    if (target_digits > 15) throw std::domain_error("ls_quad: oracle is capped at 15 digits");
    auto weight = std::function<quad::LD(int, quad::LD)>([&](int u, quad::LD t) {
        return quad::pow_int(t, l[u - 1]) * quad::pow_int(quad::log_sine_a(t), k[u - 1] - 1 - l[u - 1]);
    });
    QuadResult r = quad::run_refinements<quad::LD>(sigma, n, weight, target_digits);
    if (n % 2) {
        r.value.re = -r.value.re;
        r.value.im = -r.value.im;
    }
    return r;
}

/// Quadrature of the shifted log-sine integral SLs(k; sigma), entries >= 2.
inline QuadResult sls_quad(const Index& k, long double sigma, int target_digits = 12) {
    for (int u = 0; u < k.depth(); ++u)
        if (k[u] < 2) throw std::domain_error("sls_quad: entries must be >= 2");
    if (target_digits > 15) throw std::domain_error("sls_quad: oracle is capped at 15 digits");
    auto weight = std::function<quad::LD(int, quad::LD)>([&, sigma](int u, quad::LD t) {
        return quad::pow_int(t - sigma, k[u - 1] - 2) * quad::log_sine_a(t);
    });
    return quad::run_refinements<quad::LD>(sigma, k.depth(), weight, target_digits);
}

/// Quadrature of ILi_q^r(sigma) with the integrand written through
/// Li_1(e^{i theta}) = -A(theta) - i(theta - pi)/2 on (0, 2 pi).
inline QuadResult ili_quad(const Index& q, const Index& r, long double sigma, int target_digits = 12) {
    require_equal_depth(q, r, "ili_quad");
    if (!q.all_nonneg() || !r.all_nonneg()) throw std::domain_error("ili_quad: negative entry");
    if (target_digits > 15) throw std::domain_error("ili_quad: oracle is capped at 15 digits");
    const quad::LD pi = 3.14159265358979323846264338327950288L;
    auto weight = std::function<quad::CLD(int, quad::LD)>([&](int u, quad::LD t) {
        quad::CLD li1(-quad::log_sine_a(t), -(t - pi) / 2);
        quad::CLD it(0, t);
        return quad::CLD(0, 1) * quad::pow_int(it, q[u - 1]) * quad::pow_int(li1, r[u - 1]);
    });
    return quad::run_refinements<quad::CLD>(sigma, q.depth(), weight, target_digits);
}

}  // namespace logsine
