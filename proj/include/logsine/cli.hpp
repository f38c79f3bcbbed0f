#pragma once

#include "logsine/closed_form.hpp"
#include "logsine/eval.hpp"
#include "logsine/generators.hpp"
#include "logsine/identities.hpp"
#include "logsine/json_io.hpp"
#include "logsine/latex.hpp"
#include "logsine/quadrature.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace logsine {

// exit codes: 0 ok, 1 usage, 2 numeric failure, 3 identity-check failure
namespace cli {

inline int default_precision() {
    if (const char* env = std::getenv("LSI_PREC")) {
        int p = std::atoi(env);
        if (p > 0) return p;
    }
    return 30;
}

inline long double sigma_to_ld(const SigmaToken& tok) {
    PrecisionGuard guard(30);
    return std::strtold(tok.value().str(25).c_str(), nullptr);
}

struct CommonOut {
    bool json = false;
    bool latex = false;
};

inline void print_combo(std::ostream& out, const SymCombo& c, const CommonOut& fmt) {
    if (fmt.json)
        out << symcombo_to_json(c).dump() << "\n";
    else if (fmt.latex)
        out << to_latex(c) << "\n";
    else
        out << c.str() << "\n";
}

/// Closed-form values are real; print the real part alone once the
/// imaginary residue is below the realness tolerance.
inline void print_value(std::ostream& out, const BigComplex& v, int prec, bool json) {
    if (json) {
        Json j{{"re", v.re.str(prec)}, {"im", v.im.str(prec)}, {"prec", prec}};
        out << j.dump() << "\n";
        return;
    }
    Real tol = pow(Real(10), -(prec - 5));
    if (abs(v.im) <= tol * std::max(Real(1), abs(v.re)))
        out << v.re.str(prec) << "\n";
    else
        out << v.str(prec) << "\n";
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"log-sine integral workbench: closed forms, arbitrary-precision evaluation,\n"
                 "quadrature oracle, counting tables and integer-relation scans"};
    app.require_subcommand(1);

    std::string k_str, l_str, sigma_str = "pi/3", kind_str = "Lo", set_str = "Sprime", name_str = "all";
    std::string out_path;
    int prec = default_precision();
    int m_shift = 0, digits = 12, max_k = 10, weight = 8, depth = -1, max_ab = 2, tol_digits = 20;
    std::string sign_str = "+";
    long long height_bound = 100000000LL;  // 10^8 default
    CommonOut fmt;
    bool symbolic = false, cross_check = false, exact_weight = false;

    auto add_fmt = [&](CLI::App* cmd) {
        cmd->add_flag("--json", fmt.json, "emit JSON");
        cmd->add_flag("--latex", fmt.latex, "emit LaTeX");
    };

    auto* cf = app.add_subcommand("closed-form", "exact closed form of Ls_k^l(sigma) (or at sign(2m pi + sigma))");
    cf->add_option("--k", k_str, "index k, comma separated")->required();
    cf->add_option("--l", l_str, "index l, comma separated (default: zeros)");
    cf->add_option("--m", m_shift, "argument is sign(2 m pi + sigma)");
    cf->add_option("--sign", sign_str, "+ or -");
    add_fmt(cf);

    auto* ev = app.add_subcommand("eval", "numeric value of the closed form at sigma");
    ev->add_option("--k", k_str)->required();
    ev->add_option("--l", l_str);
    ev->add_option("--sigma", sigma_str, "evaluation point: pi token (pi/3, 2pi) or decimal");
    ev->add_option("--prec", prec, "decimal digits");
    ev->add_option("--m", m_shift);
    ev->add_option("--sign", sign_str);
    add_fmt(ev);

    auto* oc = app.add_subcommand("oracle", "independent quadrature of the defining integral");
    oc->add_option("--k", k_str)->required();
    oc->add_option("--l", l_str);
    oc->add_option("--sigma", sigma_str);
    oc->add_option("--digits", digits, "target digits (<= 15)");
    add_fmt(oc);

    auto* sl = app.add_subcommand("sls", "shifted log-sine integral SLs(k; sigma)");
    sl->add_option("--k", k_str)->required();
    sl->add_option("--sigma", sigma_str);
    sl->add_option("--prec", prec);
    sl->add_flag("--symbolic", symbolic, "print the closed form instead of the value");
    sl->add_flag("--quad", cross_check, "cross-check against the quadrature oracle");
    add_fmt(sl);

    auto* tb = app.add_subcommand("tables", "counting tables: diagonal |X_{k,k}| rows and dimension sequences");
    tb->add_option("--kind", kind_str,
                   "Lo|Le|L|Mo|Me|M|No|Ne|Sprime|So|Se|Hoffman|I|R|W|dk")->required();
    tb->add_option("--max-k", max_k);
    add_fmt(tb);

    auto* sc = app.add_subcommand("scan", "integer-relation scan over a generating set");
    sc->add_option("--set", set_str, "Sprime|So|Se|Hoffman");
    sc->add_option("--weight", weight, "total weight bound (union over k <= weight)");
    sc->add_option("--depth", depth, "depth bound d (default: k)");
    int scan_prec = 60;  // relation scans default to 60 digits
    sc->add_option("--prec", scan_prec, "scan precision in digits");
    sc->add_option("--height-bound", height_bound, "coefficient height bound");
    sc->add_option("--out", out_path, "append the JSON report to this file");
    sc->add_flag("--exact-weight", exact_weight, "scan S_{weight,depth} only, not the union");
    add_fmt(sc);

    auto* id = app.add_subcommand("identities", "verify the named constant identities numerically");
    id->add_option("--name", name_str, "all|ccs|cl_odd|cl_even_via_sls|gl_bernoulli|li_ones_two_ones");
    id->add_option("--max-k", max_k)->default_val(2);
    id->add_option("--max-ab", max_ab, "bound on a+b for li_ones_two_ones");
    id->add_option("--prec", prec);
    id->add_option("--tol-digits", tol_digits, "require |lhs-rhs| <= 10^-tol");
    add_fmt(id);

    std::vector<const char*> argv;
    argv.push_back("logsine");
    for (auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        err << app.help();
        return 1;
    }

    auto parse_kl = [&](bool need_l) {
        Index k = Index::parse(k_str);
        Index l = l_str.empty() && !need_l ? Index::repeat(0, k.depth()) : Index::parse(l_str);
        if (l_str.empty()) l = Index::repeat(0, k.depth());
        return std::make_pair(k, l);
    };
    int sign = (sign_str == "-") ? -1 : 1;

    try {
        if (cf->parsed()) {
            auto [k, l] = parse_kl(false);
            SymCombo c = (m_shift == 0 && sign > 0) ? ls_closed_form(k, l) : ls_general(k, l, m_shift, sign);
            print_combo(out, c, fmt);
            return 0;
        }
        if (ev->parsed()) {
            auto [k, l] = parse_kl(false);
            SigmaToken tok = SigmaToken::parse(sigma_str);
            SymCombo c = (m_shift == 0 && sign > 0) ? ls_closed_form(k, l) : ls_general(k, l, m_shift, sign);
            EvalContext ctx;
            ctx.precision_digits = prec;
            PrecisionGuard guard(ctx.work_digits());
            BigComplex v = combo_eval(c, tok, ctx);
            print_value(out, v, prec, fmt.json);
            return 0;
        }
        if (oc->parsed()) {
            auto [k, l] = parse_kl(false);
            SigmaToken tok = SigmaToken::parse(sigma_str);
            QuadResult r = ls_quad(k, l, sigma_to_ld(tok), digits);
            if (fmt.json) {
                Json j{{"re", r.value.re.str(18)},
                       {"im", r.value.im.str(18)},
                       {"error_estimate", r.error_estimate},
                       {"evaluations", r.evaluations},
                       {"converged", r.converged}};
                out << j.dump() << "\n";
            } else {
                out << r.value.str(16) << "  (err<=" << r.error_estimate << ", " << r.evaluations
                    << " evals)\n";
            }
            return r.converged ? 0 : 2;
        }
        if (sl->parsed()) {
            Index k = Index::parse(k_str);
            SigmaToken tok = SigmaToken::parse(sigma_str);
            SymCombo c = sls_closed_form(k);
            if (symbolic) {
                print_combo(out, c, fmt);
                return 0;
            }
            EvalContext ctx;
            ctx.precision_digits = prec;
            PrecisionGuard guard(ctx.work_digits());
            BigComplex v = combo_eval(c, tok, ctx);
            print_value(out, v, prec, fmt.json);
            if (cross_check) {
                QuadResult r = sls_quad(k, sigma_to_ld(tok), 10);
                Real diff = abs(v.re - r.value.re);
                double tol = std::max(r.error_estimate * 4, 1e-10);
                out << "oracle: " << r.value.str(14) << "  |diff|=" << diff.str(3) << "\n";
                if (!(diff < Real(tol))) return 2;
            }
            return 0;
        }
        if (tb->parsed()) {
            std::vector<long long> row;
            for (int kk = 0; kk <= max_k; ++kk) {
                long long v = 0;
                if (kind_str == "I") v = irw_dims(kk).I;
                else if (kind_str == "R") v = irw_dims(kk).R;
                else if (kind_str == "W") v = irw_dims(kk).W;
                else if (kind_str == "dk") v = zagier_dim(kk);
                else if (kind_str == "L") v = count_seq(SetKind::Lo, kk, kk) + count_seq(SetKind::Le, kk, kk);
                else if (kind_str == "M") v = count_seq(SetKind::Mo, kk, kk) + count_seq(SetKind::Me, kk, kk);
                else v = count_seq(parse_set_kind(kind_str), kk, kk);
                row.push_back(v);
            }
            if (fmt.json) {
                out << Json(row).dump() << "\n";
            } else {
                for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
                out << "\n";
            }
            return 0;
        }
        if (sc->parsed()) {
            SetKind kind = parse_set_kind(set_str);
            std::vector<ConstantExpr> exprs;
            if (exact_weight) {
                GeneratorSet g = gen_set(kind, weight, depth < 0 ? weight : depth);
                exprs = g.constants;
            } else {
                for (int w = 0; w <= weight; ++w) {
                    GeneratorSet g = gen_set(kind, w, depth < 0 ? w : std::min(depth, w));
                    exprs.insert(exprs.end(), g.constants.begin(), g.constants.end());
                }
            }
            if (exprs.size() < 2) {
                err << "scan: set has fewer than two members\n";
                return 1;
            }
            // escalate 30 -> 60 -> 120 up to the requested precision
            std::vector<int> ladder;
            for (int rung : {30, 60, 120})
                if (rung < scan_prec) ladder.push_back(rung);
            ladder.push_back(scan_prec);
            ScanResult res = scan_constants(exprs, ladder, Integer(height_bound));
            Json j = relation_report_to_json(res.names, res.report);
            out << j.dump() << "\n";
            if (!out_path.empty()) {
                std::ofstream f(out_path, std::ios::app);
                f << j.dump() << "\n";
            }
            return 0;
        }
        if (id->parsed()) {
            EvalContext ctx;
            ctx.precision_digits = prec;
            PrecisionGuard guard(ctx.work_digits());
            Real tol = pow(Real(10), -tol_digits);
            bool all_ok = true;
            auto check_pair = [&](const IdentityPair& p, const std::string& label) {
                BigComplex l = eval_terms(p.lhs, ctx), r = eval_terms(p.rhs, ctx);
                Real diff = (l - r).abs();
                bool ok = diff < tol;
                all_ok = all_ok && ok;
                out << (ok ? "[PASS] " : "[FAIL] ") << label << "  |lhs-rhs| = " << diff.str(3) << "\n";
            };
            const SigmaToken third = SigmaToken::pi_multiple(Rational(1, 3));
            if (name_str == "all" || name_str == "ccs") {
                for (int k = 0; k <= max_k; ++k) {
                    BigComplex rhs = combo_eval(ccs_identity(k), third, ctx);
                    BigComplex lhs = combo_eval(sls_closed_form(Index{2 * k + 3}), third, ctx);
                    if (k % 2) lhs = -lhs;  // (-1)^k SLs(2k+3) = rhs
                    Real diff = (lhs - rhs).abs();
                    bool ok = diff < tol;
                    all_ok = all_ok && ok;
                    out << (ok ? "[PASS] " : "[FAIL] ") << "ccs k=" << k << "  |lhs-rhs| = " << diff.str(3)
                        << "\n";
                }
            }
            if (name_str == "all" || name_str == "cl_odd")
                for (int k = 1; k <= max_k; ++k)
                    check_pair(special_identity("cl_odd", k), "cl_odd k=" + std::to_string(k));
            if (name_str == "all" || name_str == "cl_even_via_sls")
                for (int k = 0; k <= max_k; ++k)
                    check_pair(special_identity("cl_even_via_sls", k),
                               "cl_even_via_sls k=" + std::to_string(k));
            if (name_str == "all" || name_str == "gl_bernoulli")
                for (int k = 2; k <= max_k + 2; ++k)
                    check_pair(special_identity("gl_bernoulli", k), "gl_bernoulli k=" + std::to_string(k));
            if (name_str == "all" || name_str == "li_ones_two_ones")
                for (int a = 0; a <= max_ab; ++a)
                    for (int b = 0; a + b <= max_ab; ++b)
                        check_pair(special_identity("li_ones_two_ones", a, b),
                                   "li_ones_two_ones a=" + std::to_string(a) + " b=" + std::to_string(b));
            return all_ok ? 0 : 3;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "numeric failure: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

}  // namespace cli
}  // namespace logsine
