#pragma once

#include "logsine/symcombo.hpp"

#include <sstream>
#include <string>

namespace logsine {

namespace latex_detail {

inline std::string frac(const Rational& q) {
    Integer n = numerator(q), d = denominator(q);
    bool neg = n < 0;
    if (neg) n = -n;
    std::string body = (d == 1) ? n.str() : "\\frac{" + n.str() + "}{" + d.str() + "}";
    return (neg ? "-" : "") + body;
}

inline std::string index_commas(const Index& k) {
    std::string s;
    for (int u = 0; u < k.depth(); ++u) {
        if (u) s += " , ";
        s += std::to_string(k[u]);
    }
    return s;
}

inline std::string power(const std::string& sym, int p) {
    if (p == 1) return sym;
    return sym + "^{" + std::to_string(p) + "}";
}

/// Atoms of one monomial, without the coefficient.
inline std::string atoms(const Monomial& m) {
    std::string s;
    auto sep = [&]() {
        if (!s.empty()) s += " ";
    };
    if (m.pi_pow) { sep(); s += power("\\pi", m.pi_pow); }
    if (m.sigma_pow) { sep(); s += power("\\sigma", m.sigma_pow); }
    for (auto& z : m.zetas) { sep(); s += "\\zeta(" + index_commas(z) + ")"; }
    if (m.li) { sep(); s += "{\\rm Li}_{" + index_commas(*m.li) + "}(e^{i \\sigma})"; }
    return s;
}

}  // namespace latex_detail

/// SymCombo in the notation of the closed-form displays:
/// rational (or i-rational) coefficients, powers of sigma and pi, zeta
/// values and polylogarithms at e^{i sigma}.
inline std::string to_latex(const SymCombo& c) {
    using namespace latex_detail;
    if (c.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, g] : c.terms()) {
        // print a + ib as one or two signed terms
        struct Piece {
            Rational q;
            bool imaginary;
        };
        std::vector<Piece> pieces;
        if (g.re != 0) pieces.push_back({g.re, false});
        if (g.im != 0) pieces.push_back({g.im, true});
        for (auto& p : pieces) {
            Rational q = p.q;
            bool neg = q < 0;
            if (neg) q = -q;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            std::string a = atoms(m);
            bool unit = (q == 1);
            std::string piece;
            if (!unit || (a.empty() && !p.imaginary)) piece = frac(q);
            if (p.imaginary) {
                if (!piece.empty()) piece += " ";
                piece += "i";
            }
            if (!a.empty()) {
                if (!piece.empty()) piece += " ";
                piece += a;
            }
            os << piece;
        }
    }
    return os.str();
}

}  // namespace logsine
