#pragma once

// Test-only brute-force oracles: truncated nested sums and elementary
// series, independent of the transport evaluator and the closed forms.

#include "logsine/index.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace testhelp {

using logsine::Index;

/// zeta(k) by direct truncated nested summation (outer limit M).
/// Accuracy is only polynomial in M; callers pass loose tolerances.
inline double mzv_brute(const Index& k, int M) {
    int n = k.depth();
    if (n == 0) return 1.0;
    // partial[j][m] = sum over m_1 < ... < m_j <= m of the inner product
    std::vector<double> prev(M + 1, 1.0);  // j = 0: empty product
    for (int j = 1; j <= n; ++j) {
        std::vector<double> cur(M + 1, 0.0);
        double acc = 0;
        for (int m = 1; m <= M; ++m) {
            acc += prev[m - 1] * std::pow((double)m, -k[j - 1]);
            cur[m] = acc;
        }
        prev = std::move(cur);
    }
    return prev[M];
}

/// Li_k(e^{i sigma}) by direct truncated nested summation.
inline std::complex<double> mpl_brute(const Index& k, double sigma, int M) {
    int n = k.depth();
    if (n == 0) return 1.0;
    std::vector<double> prev(M + 1, 1.0);
    for (int j = 1; j < n; ++j) {
        std::vector<double> cur(M + 1, 0.0);
        double acc = 0;
        for (int m = 1; m <= M; ++m) {
            acc += (j == 1 ? 1.0 : prev[m - 1]) * std::pow((double)m, -k[j - 1]);
            cur[m] = acc;
        }
        prev = cur;
    }
    std::complex<double> acc = 0;
    for (int m = 1; m <= M; ++m) {
        double inner = (n == 1) ? 1.0 : prev[m - 1];
        acc += inner * std::pow((double)m, -k[n - 1]) * std::exp(std::complex<double>(0, sigma * m));
    }
    return acc;
}

/// zeta(3) by series with an Euler-Maclaurin tail correction.
inline double zeta3_series(int M = 20000) {
    double s = 0;
    for (int m = M; m >= 1; --m) s += 1.0 / ((double)m * m * m);
    double Md = M;
    s += 1.0 / (2 * Md * Md) - 1.0 / (2 * Md * Md * Md);  // int tail + half term
    return s;
}

/// Cl_2(sigma) = sum sin(m sigma)/m^2, truncated.
inline double clausen2_series(double sigma, int M = 200000) {
    double s = 0;
    for (int m = M; m >= 1; --m) s += std::sin(m * sigma) / ((double)m * m);
    return s;
}

inline std::mt19937& rng() {
    static std::mt19937 gen(0);  // fixed seed
    return gen;
}

inline Index random_index(int depth, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<int> e(depth);
    for (auto& v : e) v = d(rng());
    return Index(std::move(e));
}

}  // namespace testhelp
