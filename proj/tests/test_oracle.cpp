#include "logsine/quadrature.hpp"

#include "logsine/closed_form.hpp"
#include "logsine/eval.hpp"

#include "helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace logsine;

namespace {
const long double PI_L = 3.14159265358979323846264338327950288L;

double re_double(const QuadResult& r) { return r.value.re.convert_to<double>(); }

double combo_at(const SymCombo& c, const char* sigma_literal, int digits = 30) {
    EvalContext ctx;
    ctx.precision_digits = digits;
    PrecisionGuard guard(ctx.work_digits());
    BigComplex v = combo_eval(c, SigmaToken::parse(sigma_literal), ctx);
    return v.re.convert_to<double>();
}
}  // namespace

TEST_CASE("log-sine quadrature, polynomial cases are exact") {
    PrecisionGuard g(30);
    QuadResult r = ls_quad(Index{1}, Index{0}, 2.0L);
    CHECK(std::fabs(re_double(r) + 2.0) < 1e-13);
    CHECK(r.converged);

    r = ls_quad(Index{2}, Index{1}, 1.5L);
    CHECK(std::fabs(re_double(r) + 1.125) < 1e-13);

    CHECK_THROWS_AS(ls_quad(Index{1}, Index{1}, 1.0L), std::domain_error);
    CHECK_THROWS_AS(ls_quad(Index{2}, Index{0}, 1.0L, 16), std::domain_error);
}

TEST_CASE("log-sine quadrature agrees with the closed form") {
    PrecisionGuard g(30);
    QuadResult r = ls_quad(Index{2, 1}, Index{0, 0}, 1.0L);
    double cf = combo_at(ls_closed_form(Index{2, 1}, Index{0, 0}), "1.0");
    CHECK(std::fabs(re_double(r) - cf) < 1e-10);

    r = ls_quad(Index{3}, Index{0}, PI_L / 3);
    cf = combo_at(ls_closed_form(Index{3}, Index{0}), "pi/3");
    CHECK(std::fabs(re_double(r) - cf) < 1e-10);
}

TEST_CASE("shifted log-sine quadrature against series-derived digits") {
    PrecisionGuard g(30);
    QuadResult r = sls_quad(Index{3}, PI_L / 3);
    CHECK(std::fabs(re_double(r) - (2.0 / 3.0) * testhelp::zeta3_series()) < 1e-9);

    r = sls_quad(Index{2}, PI_L / 3);
    CHECK(std::fabs(re_double(r) + testhelp::clausen2_series(PI_L / 3)) < 1e-8);

    // SLs(2,2) = (1/2) SLs(2)^2 by the shuffle relation
    QuadResult r22 = sls_quad(Index{2, 2}, 1.0L);
    QuadResult r2 = sls_quad(Index{2}, 1.0L);
    double lhs = re_double(r22), rhs = 0.5 * re_double(r2) * re_double(r2);
    CHECK(std::fabs(lhs - rhs) < 2 * (r22.error_estimate + r2.error_estimate) + 1e-12);
}

TEST_CASE("ILi quadrature") {
    PrecisionGuard g(30);
    QuadResult r = ili_quad(Index{0}, Index{0}, 1.7L);
    CHECK(std::fabs(re_double(r)) < 1e-13);
    CHECK(std::fabs(r.value.im.convert_to<double>() - 1.7) < 1e-13);

    r = ili_quad(Index{1}, Index{0}, 1.7L);
    CHECK(std::fabs(re_double(r) + 1.7 * 1.7 / 2) < 1e-13);
    CHECK(std::fabs(r.value.im.convert_to<double>()) < 1e-13);

    // antiderivative of i Li_1(e^{i t}) from 0 to 2: Li_2(e^{2i}) - zeta(2)
    r = ili_quad(Index{0}, Index{1}, 2.0L);
    EvalContext ctx;
    PrecisionGuard guard(ctx.work_digits());
    BigComplex expect = mpl_eval(Index{2}, SigmaToken::decimal("2.0"), ctx) -
                        BigComplex(mzv_eval(Index{2}, ctx));
    CHECK((r.value - expect).abs().convert_to<double>() < 1e-10);
}

TEST_CASE("ILi equals F numerically (depth <= 2, small weight)") {
    PrecisionGuard g(30);
    std::vector<std::pair<Index, Index>> cases = {
        {Index{0}, Index{1}}, {Index{1}, Index{1}}, {Index{0}, Index{2}},
        {Index{0, 0}, Index{1, 0}}, {Index{0, 0}, Index{0, 1}}, {Index{0, 0}, Index{1, 1}},
        {Index{1, 0}, Index{0, 1}}, {Index{0, 1}, Index{1, 0}}};
    for (auto& [q, rr] : cases) {
        for (long double s : {0.9L, 2.4L}) {
            QuadResult quad = ili_quad(q, rr, s);
            EvalContext ctx;
            PrecisionGuard guard(ctx.work_digits());
            char buf[32];
            snprintf(buf, sizeof buf, "%.10Lf", s);
            BigComplex sym = combo_eval(big_f_sym(q, rr), SigmaToken::decimal(buf), ctx);
            double d = (quad.value - sym).abs().convert_to<double>();
            INFO("q=" << q.str() << " r=" << rr.str() << " sigma=" << (double)s);
            CHECK(d < 2 * quad.error_estimate + 1e-9);
        }
    }
}

TEST_CASE("reflection law holds for the raw integrals") {
    PrecisionGuard g(30);
    std::vector<std::pair<Index, Index>> cases = {
        {Index{1}, Index{0}}, {Index{2}, Index{0}}, {Index{2}, Index{1}},
        {Index{1, 1}, Index{0, 0}}, {Index{2, 1}, Index{0, 0}}, {Index{1, 2}, Index{0, 1}}};
    for (auto& [k, l] : cases) {
        QuadResult plus = ls_quad(k, l, 1.0L);
        QuadResult minus = ls_quad(k, l, -1.0L);
        double sign = ls_reflect(k, l);
        CHECK(std::fabs(re_double(plus) - sign * re_double(minus)) <
              2 * (plus.error_estimate + minus.error_estimate) + 1e-12);
    }
}

TEST_CASE("decomposition and shift compose across 2 pi") {
    PrecisionGuard g(30);
    // Ls_k^l(2 pi + s) = sum_h Ls_{k_h}^{l_h}(2 pi) * sum_{j <= l^h} (2 pi)^{|j|}
    //                    binom(l^h, j) Ls_{k^h - j}^{l^h - j}(s), oracle calls only
    const long double s = 1.0L;
    for (auto& [k, l] : std::vector<std::pair<Index, Index>>{{Index{2}, Index{1}},
                                                             {Index{1, 1}, Index{0, 0}},
                                                             {Index{2, 1}, Index{0, 0}}}) {
        QuadResult lhs = ls_quad(k, l, 2 * PI_L + s);
        double rhs = 0, err = lhs.error_estimate;
        int n = k.depth();
        for (int h = 0; h <= n; ++h) {
            double head = 1;
            if (h > 0) {
                QuadResult qh = ls_quad(k.prefix(h), l.prefix(h), 2 * PI_L);
                head = re_double(qh);
                err += qh.error_estimate;
            }
            double tail = 0;
            for (auto& t : ls_shift_expand(k.suffix_from(h), l.suffix_from(h), 1)) {
                QuadResult qt = ls_quad(t.k, t.l, s);
                tail += t.coeff.convert_to<double>() * std::pow((double)PI_L, t.pi_pow) * re_double(qt);
                err += qt.error_estimate * 8;
            }
            rhs += head * tail;
        }
        INFO("k=" << k.str() << " l=" << l.str());
        CHECK(std::fabs(re_double(lhs) - rhs) < 4 * err + 1e-9);
    }
}

TEST_CASE("general-argument closed forms match the oracle across 2 pi") {
    PrecisionGuard g(30);
    EvalContext ctx;
    PrecisionGuard guard(ctx.work_digits());
    for (auto& [k, l] : std::vector<std::pair<Index, Index>>{
             {Index{2, 1}, Index{0, 0}}, {Index{3}, Index{1}}, {Index{2, 2}, Index{0, 1}}}) {
        BigComplex sym = combo_eval(ls_general(k, l, 1, +1), SigmaToken::decimal("1.0"), ctx);
        QuadResult quad = ls_quad(k, l, 2 * PI_L + 1.0L);
        INFO("k=" << k.str() << " l=" << l.str());
        CHECK(std::fabs(re_double(quad) - sym.re.convert_to<double>()) < 1e-9);

        BigComplex neg = combo_eval(ls_general(k, l, 1, -1), SigmaToken::decimal("1.0"), ctx);
        QuadResult nquad = ls_quad(k, l, -(2 * PI_L + 1.0L));
        CHECK(std::fabs(re_double(nquad) - neg.re.convert_to<double>()) < 1e-9);
    }

    // m = 2: the integration range crosses the singular points 2 pi and 4 pi
    BigComplex sym = combo_eval(ls_general(Index{2, 1}, Index{0, 0}, 2, +1),
                                SigmaToken::decimal("1.0"), ctx);
    QuadResult quad = ls_quad(Index{2, 1}, Index{0, 0}, 4 * PI_L + 1.0L);
    CHECK(std::fabs(re_double(quad) - sym.re.convert_to<double>()) < 1e-8);
}

TEST_CASE("refining the grading keeps the value within the reported error") {
    PrecisionGuard g(30);
    auto weight = std::function<quad::LD(int, quad::LD)>([&](int u, quad::LD t) {
        (void)u;
        return quad::log_sine_a(t);
    });
    long evals = 0;
    quad::LD fine = quad::cascade<quad::LD>(PI_L / 3, 1, weight, 46, 124, &evals);
    quad::LD finer = quad::cascade<quad::LD>(PI_L / 3, 1, weight, 52, 140, &evals);
    QuadResult r = ls_quad(Index{2}, Index{0}, PI_L / 3);
    CHECK(std::fabs((double)(fine - finer)) <= r.error_estimate + 1e-16);
    CHECK(r.evaluations > 0);
}
