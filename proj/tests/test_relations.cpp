#include "logsine/generators.hpp"

#include "logsine/identities.hpp"
#include "logsine/json_io.hpp"
#include "logsine/quadrature.hpp"

#include "combo_builders.hpp"
#include "helpers.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace logsine;

TEST_CASE("PSLQ recovers simple relations") {
    PrecisionGuard g(50);
    Real pi = pi_value();
    EvalContext ctx;
    ctx.precision_digits = 40;

    // pi^2 - 6 zeta(2) = 0
    RelationReport r = integer_relation({pi * pi, mzv_eval(Index{2}, ctx)}, 40, Integer(1000000));
    REQUIRE(r.found());
    CHECK(*r.coeffs == std::vector<Integer>{1, -6});

    // 2 zeta(3) - 3 SLs(3) = 0
    Real z3 = mzv_eval(Index{3}, ctx);
    Real sls3 = eval_constant_expr(ConstantExpr{0, ConstantExpr::Atom::SLs, Index{3}, SetKind::Sprime}, ctx);
    r = integer_relation({z3, sls3}, 40, Integer(1000000));
    REQUIRE(r.found());
    CHECK(*r.coeffs == std::vector<Integer>{2, -3});

    // residual survives re-evaluation at doubled precision
    EvalContext ctx2;
    ctx2.precision_digits = 80;
    PrecisionGuard g2(ctx2.work_digits());
    Real resid = abs(Real(2) * mzv_eval(Index{3}, ctx2) -
                     Real(3) * eval_constant_expr(
                                   ConstantExpr{0, ConstantExpr::Atom::SLs, Index{3}, SetKind::Sprime},
                                   ctx2));
    CHECK(resid < pow(Real(10), -75));
}

TEST_CASE("PSLQ certifies absence for {1, pi}") {
    PrecisionGuard g(60);
    Real pi = pi_value();
    RelationReport r = integer_relation({Real(1), pi}, 40, Integer(1000000));
    CHECK_FALSE(r.found());
    CHECK(r.certified_height >= Integer(1000000));
    CHECK_FALSE(r.precision_exhausted);
}

TEST_CASE("generator sets, printed examples") {
    GeneratorSet g = gen_set(SetKind::Sprime, 3, 1);
    REQUIRE(g.constants.size() == 1);
    CHECK(g.constants[0].name() == "SLs(3)");

    g = gen_set(SetKind::Se, 4, 1);
    REQUIRE(g.constants.size() == 1);
    CHECK(g.constants[0].name() == "pi^4");

    g = gen_set(SetKind::Sprime, 2, 0);
    REQUIRE(g.constants.size() == 1);
    CHECK(g.constants[0].name() == "pi^2");

    g = gen_set(SetKind::So, 3, 3);
    REQUIRE(g.constants.size() == 2);  // pi*SLs(2), SLs(3)
}

TEST_CASE("counting sequences and closed forms") {
    CHECK(count_seq(SetKind::Lo, 5, 5) == 25);
    CHECK(count_seq(SetKind::Mo, 10, 10) == 256);
    CHECK(count_seq(SetKind::Le, 3, 3) == 5);
    CHECK((fibonacci(6) + fibonacci(3)) / 2 == 5);

    CHECK(zagier_dim(2) == 1);
    CHECK(zagier_dim(3) == 1);
    CHECK(zagier_dim(4) == 1);
    IRW w2 = irw_dims(2);
    CHECK(w2.I == 1);
    CHECK(w2.R == 1);
    CHECK(w2.W == 2);
    CHECK(irw_dims(10).W == 89);
}

TEST_CASE("enumeration matches the recurrence counts") {
    for (SetKind kind : {SetKind::Sprime, SetKind::So, SetKind::Se, SetKind::Hoffman}) {
        for (int k = 0; k <= 10; ++k)
            for (int d = 0; d <= k; ++d) {
                INFO(set_kind_name(kind) << " k=" << k << " d=" << d);
                CHECK((long long)gen_set(kind, k, d).constants.size() == count_seq(kind, k, d));
            }
    }
    for (SetKind kind : {SetKind::Lo, SetKind::Le, SetKind::Mo, SetKind::Me, SetKind::No, SetKind::Ne}) {
        for (int k = 0; k <= 9; ++k)
            for (int d = 0; d <= k; ++d) {
                INFO(set_kind_name(kind) << " k=" << k << " d=" << d);
                CHECK((long long)gen_set(kind, k, d).integrals.size() == count_seq(kind, k, d));
            }
    }
}

TEST_CASE("diagonal closed forms up to k = 20") {
    for (int k = 1; k <= 20; ++k) {
        CHECK(count_seq(SetKind::Lo, k, k) == (fibonacci(2 * k) - fibonacci(k)) / 2);
        CHECK(count_seq(SetKind::Le, k, k) == (fibonacci(2 * k) + fibonacci(k)) / 2);
        if (k >= 2) {
            CHECK(count_seq(SetKind::Mo, k, k) == (1LL << (k - 2)));
            CHECK(count_seq(SetKind::Me, k, k) == (1LL << (k - 2)));
        }
    }
    for (int k = 0; k <= 13; ++k) {
        CHECK(count_seq(SetKind::Sprime, k, k) == zagier_dim(k));
        CHECK(count_seq(SetKind::So, k, k) == irw_dims(k).I);
        CHECK(count_seq(SetKind::Se, k, k) == irw_dims(k).R);
    }
}

TEST_CASE("S' is closed under shuffle products") {
    // the product of two S' generators expands into S'_{k1+k2, d1+d2}
    // members with positive integer multiplicities
    auto a = gen_set(SetKind::Sprime, 5, 5), b = gen_set(SetKind::Sprime, 6, 6);
    auto target = gen_set(SetKind::Sprime, 11, 11);
    std::set<std::pair<int, Index>> members;
    for (auto& e : target.constants) members.insert({e.pi_pow, e.index});
    for (auto& ea : a.constants)
        for (auto& eb : b.constants) {
            std::map<Index, int> mult;
            for (auto& idx : sls_shuffle(ea.index, eb.index)) mult[idx] += 1;
            for (auto& [idx, m] : mult) {
                CHECK(m >= 1);
                CHECK(members.count({ea.pi_pow + eb.pi_pow, idx}) == 1);
            }
        }
}

TEST_CASE("weight-8 SLs scan constants agree with the quadrature oracle") {
    EvalContext ctx;
    ctx.precision_digits = 60;
    PrecisionGuard g(ctx.work_digits());
    SigmaToken third = SigmaToken::pi_multiple(Rational(1, 3));
    const long double PI_L = 3.14159265358979323846264338327950288L;
    for (Index k : {Index{3, 5}, Index{5, 3}, Index{3, 3}, Index{7}}) {
        BigComplex sym = combo_eval(sls_closed_form(k), third, ctx);
        QuadResult quad = sls_quad(k, PI_L / 3, 10);
        INFO("SLs(" << k.str() << ")");
        CHECK(std::fabs((sym.re - quad.value.re).convert_to<double>()) <
              std::max(4 * quad.error_estimate, 1e-10));
    }
}

TEST_CASE("CCS identity, symbolic k = 0 and numeric small k") {
    CHECK(ccs_identity(0) == combo::zeta(Index{3}, combo::q(2, 3)));

    EvalContext ctx;
    ctx.precision_digits = 30;
    PrecisionGuard g(ctx.work_digits());
    SigmaToken third = SigmaToken::pi_multiple(Rational(1, 3));
    for (int k = 0; k <= 2; ++k) {
        BigComplex rhs = combo_eval(ccs_identity(k), third, ctx);
        BigComplex sls = combo_eval(sls_closed_form(Index{2 * k + 3}), third, ctx);
        if (k % 2) sls = -sls;
        CHECK((sls - rhs).abs() < pow(Real(10), -20));
    }
}

TEST_CASE("special identities evaluate to equal sides") {
    EvalContext ctx;
    ctx.precision_digits = 30;
    PrecisionGuard g(ctx.work_digits());
    Real tol = pow(Real(10), -20);

    auto check = [&](const IdentityPair& p) {
        BigComplex l = eval_terms(p.lhs, ctx), r = eval_terms(p.rhs, ctx);
        INFO(p.name << ": " << terms_str(p.lhs) << " vs " << terms_str(p.rhs));
        CHECK((l - r).abs() < tol);
    };
    check(special_identity("cl_odd", 1));
    check(special_identity("cl_odd", 2));
    check(special_identity("cl_even_via_sls", 0));
    check(special_identity("cl_even_via_sls", 1));
    check(special_identity("gl_bernoulli", 2));
    check(special_identity("gl_bernoulli", 5));
    check(special_identity("li_ones_two_ones", 0, 0));
    check(special_identity("li_ones_two_ones", 1, 1));
    CHECK_THROWS_AS(special_identity("nope", 1), std::invalid_argument);

    // cl_odd k=1 is Cl_3(pi/3) = zeta(3)/3
    auto p = special_identity("cl_odd", 1);
    REQUIRE(p.rhs.size() == 1);
    CHECK(p.rhs[0].coeff == GaussRat(Rational(1, 3)));
}

TEST_CASE("express_target finds rational expressions") {
    EvalContext ctx;
    ctx.precision_digits = 60;
    PrecisionGuard g(ctx.work_digits());

    // zeta(1,2) = (3/2) SLs(3) over S'_{3,3}
    ScanResult r = express_target("zeta(1,2)", mzv_eval(Index{1, 2}, ctx), gen_set(SetKind::Sprime, 3, 3),
                                  60, Integer(1000000));
    REQUIRE(r.report.found());
    CHECK(*r.report.coeffs == std::vector<Integer>{2, -3});

    // Gl_2(pi/3) = pi^2/36 over S^e_{2,2} = {pi^2}
    SigmaToken third = SigmaToken::pi_multiple(Rational(1, 3));
    ScanResult r2 = express_target("Gl2", cl_gl_eval(CGKind::Gl, Index{2}, third, ctx),
                                   gen_set(SetKind::Se, 2, 2), 60, Integer(1000000));
    REQUIRE(r2.report.found());
    CHECK(*r2.report.coeffs == std::vector<Integer>{36, -1});

    // Cl_3(pi/3) = (1/2) SLs(3) over S^o_{3,3} = {pi SLs(2), SLs(3)}
    ScanResult r3 = express_target("Cl3", cl_gl_eval(CGKind::Cl, Index{3}, third, ctx),
                                   gen_set(SetKind::So, 3, 3), 60, Integer(1000000));
    REQUIRE(r3.report.found());
    CHECK(*r3.report.coeffs == std::vector<Integer>{2, 0, -1});
}

TEST_CASE("relation report JSON") {
    RelationReport r;
    r.coeffs = std::vector<Integer>{2, -3};
    r.precision = 60;
    r.requested_height = 1000000;
    r.residual = "1e-55";
    Json j = relation_report_to_json({"a", "b"}, r);
    CHECK(j["coeffs"][0] == "2");
    CHECK(j["height_bound"] == "1000000");

    RelationReport none;
    none.precision = 60;
    none.requested_height = 1000000;
    none.certified_height = 1234;
    Json j2 = relation_report_to_json({"a", "b"}, none);
    CHECK(j2["coeffs"].is_null());
    CHECK(j2["height_bound"] == "1234");
    CHECK(j2["requested_height"] == "1000000");
}
