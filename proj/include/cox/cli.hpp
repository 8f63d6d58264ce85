#pragma once

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cox/salem.hpp"
#include "cox/tree_expr.hpp"
#include "cox/verify.hpp"

namespace cox::cli {

using nlohmann::json;

/// Fixed 12 significant digits; identical invocations print identical bytes.
inline std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace detail {

inline json coeffs_json(const IntPolynomial& p) {
    json a = json::array();
    for (int i = 0; i <= p.degree(); ++i)
        a.push_back(static_cast<long long>(p[i]));
    return a;
}

inline json interval_json(const RatInterval& iv) {
    return json::array({static_cast<double>(iv.lo), static_cast<double>(iv.hi)});
}

inline std::string cyclotomic_part_text(const CyclotomicFactorization& f) {
    if (f.cyclotomic_part.empty())
        return "(none)";
    std::string s;
    for (const auto& [d, m] : f.cyclotomic_part) {
        if (!s.empty())
            s += ' ';
        s += std::to_string(d);
        if (m > 1)
            s += '^' + std::to_string(m);
    }
    return s;
}

struct PolyInput {
    std::string expr;   // tree DSL, or
    std::string coeffs; // ascending coefficient list

    bool from_tree() const { return !expr.empty(); }

    IntPolynomial cox_poly(Tree* tree_out = nullptr) const {
        if (from_tree()) {
            Tree t = elaborate(parse_tree_expr(expr));
            if (tree_out)
                *tree_out = t;
            return coxeter_polynomial(t);
        }
        return IntPolynomial::from_coeff_string(coeffs);
    }

    std::string display() const { return from_tree() ? expr : coeffs; }
};

inline IntPolynomial cox_by_method(const TreeExpr& ast, const Tree& t, const std::string& method,
                                   std::ostream& err) {
    auto closed = [&]() -> IntPolynomial {
        const auto* s = std::get_if<SalemNode>(&ast.node);
        if (!s || s->spec.k() != 3)
            throw invalid_spec("--method closed needs a three-arm S(i;p,q,r) expression");
        return closed_form_cox(s->spec.i, s->spec.arms[0], s->spec.arms[1], s->spec.arms[2]);
    };
    if (method == "matrix")
        return coxeter_polynomial(t);
    if (method == "reflect")
        return coxeter_polynomial_via_reflections(t);
    if (method == "split")
        return coxeter_polynomial_via_split(t);
    if (method == "closed")
        return closed();
    // "all": every applicable route must agree exactly
    IntPolynomial m = coxeter_polynomial(t);
    if (coxeter_polynomial_via_reflections(t) != m)
        throw internal_error("reflection route disagrees with the matrix route");
    if (coxeter_polynomial_via_split(t) != m)
        throw internal_error("splitting route disagrees with the matrix route");
    if (const auto* s = std::get_if<SalemNode>(&ast.node); s && s->spec.k() == 3) {
        if (closed() != m)
            throw internal_error("closed form disagrees with the matrix route");
        err << "# matrix, reflect, split and closed routes agree\n";
    } else {
        err << "# matrix, reflect and split routes agree\n";
    }
    return m;
}

inline std::vector<Arm> parse_grow(const std::string& grow) {
    std::vector<Arm> arms;
    std::string tok;
    auto flush = [&]() {
        if (tok == "p")
            arms.push_back(Arm::p);
        else if (tok == "q")
            arms.push_back(Arm::q);
        else if (tok == "r")
            arms.push_back(Arm::r);
        else
            throw invalid_spec("--grow expects a comma list drawn from p,q,r");
        tok.clear();
    };
    for (char c : grow) {
        if (c == ',')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(c)))
            tok += c;
    }
    flush();
    return arms;
}

} // namespace detail

/// Entry point shared by the cox binary and the tests. Returns the process
/// exit status: 0 ok, 1 user error, 2 internal-consistency failure.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coxeter polynomials of trees: exact computation, classification and limits"};
    app.require_subcommand(1);

    std::string expr, coeffs, method = "matrix", grow, suite = "all", q_coeffs;
    int q_phi = 0, jobs = 1, start = 0, maxv = 0, fam_i = 0;
    std::vector<int> arms;
    double tol = kDefaultRadiusTol;
    bool as_json = false, pretty = false;

    auto* c_poly = app.add_subcommand("poly", "Coxeter polynomial of a tree expression");
    c_poly->add_option("expr", expr, "tree expression, e.g. S(0;1,2,6) or join(A3@1,A1@1)")
        ->required();
    c_poly->add_option("--method", method, "matrix|reflect|split|closed|all")
        ->check(CLI::IsMember({"matrix", "reflect", "split", "closed", "all"}));
    c_poly->add_flag("--json", as_json, "JSON output");
    c_poly->add_flag("--pretty", pretty, "human-readable polynomial");

    auto* c_char = app.add_subcommand("charpoly", "adjacency characteristic polynomial");
    c_char->add_option("expr", expr, "tree expression")->required();
    c_char->add_flag("--json", as_json, "JSON output");
    c_char->add_flag("--pretty", pretty, "human-readable polynomial");

    auto* c_classify = app.add_subcommand("classify", "cyclotomic/Salem/Pisot classification");
    c_classify->add_option("expr", expr, "tree expression");
    c_classify->add_option("--coeffs", coeffs, "ascending coefficient list instead of a tree");
    c_classify->add_option("--tol", tol, "radius enclosure width");
    c_classify->add_flag("--json", as_json, "JSON output");

    auto* c_radius = app.add_subcommand("radius", "spectral radius enclosure");
    c_radius->add_option("expr", expr, "tree expression");
    c_radius->add_option("--coeffs", coeffs, "ascending coefficient list instead of a tree");
    c_radius->add_option("--tol", tol, "enclosure width");
    c_radius->add_flag("--json", as_json, "JSON output");

    auto* c_limits = app.add_subcommand("limits", "spectral-radius limit experiments");
    c_limits->add_option("--i", fam_i, "family index i in 0..3")->required();
    c_limits->add_option("--arms", arms, "fixed arm values p,q,r")->delimiter(',')->expected(3);
    c_limits->add_option("--grow", grow, "arms sent to infinity, outermost first (e.g. r or q,r)")
        ->required();
    c_limits->add_option("--start", start, "first swept value")->required();
    c_limits->add_option("--max", maxv, "last swept value")->required();
    c_limits->add_option("--tol", tol, "radius enclosure width");
    c_limits->add_flag("--json", as_json, "JSON output");

    auto* c_mult = app.add_subcommand("multiplicity", "join multiplicity bound check");
    c_mult->add_option("expr", expr, "a join(...) expression")->required();
    c_mult->add_option("--q-coeffs", q_coeffs, "witness polynomial, ascending coefficients");
    c_mult->add_option("--q-phi", q_phi, "witness polynomial Phi_d");
    c_mult->add_flag("--json", as_json, "JSON output");

    auto* c_verify = app.add_subcommand("verify", "run the built-in verification suites");
    c_verify->add_option("suite", suite, "suite name or 'all'");
    c_verify->add_option("--jobs", jobs, "worker threads for grid suites");
    c_verify->add_flag("--json", as_json, "JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (c_poly->parsed()) {
            TreeExpr ast = parse_tree_expr(expr);
            Tree t = elaborate(ast);
            IntPolynomial p = detail::cox_by_method(ast, t, method, err);
            if (as_json) {
                json j{{"tree", print_tree_expr(ast)}, {"coeffs", detail::coeffs_json(p)}};
                out << j.dump() << '\n';
            } else {
                out << (pretty ? p.pretty() : p.to_coeff_string()) << '\n';
            }
        } else if (c_char->parsed()) {
            TreeExpr ast = parse_tree_expr(expr);
            IntPolynomial p = adjacency_char_poly(elaborate(ast));
            if (as_json) {
                json j{{"tree", print_tree_expr(ast)}, {"coeffs", detail::coeffs_json(p)}};
                out << j.dump() << '\n';
            } else {
                out << (pretty ? p.pretty() : p.to_coeff_string()) << '\n';
            }
        } else if (c_classify->parsed()) {
            detail::PolyInput in{expr, coeffs};
            if (in.expr.empty() == in.coeffs.empty())
                throw invalid_spec("classify needs exactly one of <expr> or --coeffs");
            IntPolynomial p = in.cox_poly();
            ClassificationReport rep =
                in.from_tree() ? classify_tree(elaborate(parse_tree_expr(expr)), tol)
                               : classify(p, tol);
            if (as_json) {
                json j{{"tree", in.display()},
                       {"coeffs", detail::coeffs_json(p)},
                       {"verdict", to_string(rep.verdict)},
                       {"radius", detail::interval_json(rep.radius)},
                       {"mahler", detail::interval_json(rep.mahler)},
                       {"cyclotomic", json::object()},
                       {"remainder", detail::coeffs_json(rep.factorization.remainder)},
                       {"roots_outside", rep.roots_outside},
                       {"roots_on_circle", rep.roots_on_circle}};
                for (const auto& [d, m] : rep.factorization.cyclotomic_part)
                    j["cyclotomic"][std::to_string(d)] = m;
                out << j.dump() << '\n';
            } else {
                out << "verdict: " << to_string(rep.verdict) << '\n';
                out << "radius: " << fmt12(rep.radius.mid()) << '\n';
                out << "mahler: " << fmt12(rep.mahler.mid()) << '\n';
                out << "cyclotomic: " << detail::cyclotomic_part_text(rep.factorization) << '\n';
                out << "remainder: " << rep.factorization.remainder.to_coeff_string() << '\n';
            }
        } else if (c_radius->parsed()) {
            detail::PolyInput in{expr, coeffs};
            if (in.expr.empty() == in.coeffs.empty())
                throw invalid_spec("radius needs exactly one of <expr> or --coeffs");
            RatInterval rho = in.from_tree()
                                  ? spectral_radius_tree(elaborate(parse_tree_expr(expr)), tol)
                                  : [&] {
                                        auto rr = spectral_radius_of_poly(in.cox_poly(), tol);
                                        if (!rr)
                                            throw invalid_spec(
                                                "no certified real dominant root above 1");
                                        return *rr;
                                    }();
            if (as_json) {
                json j{{"tree", in.display()}, {"radius", detail::interval_json(rho)}};
                out << j.dump() << '\n';
            } else {
                out << fmt12(rho.mid()) << '\n';
            }
        } else if (c_limits->parsed()) {
            if (arms.empty())
                arms = {0, 0, 0};
            LimitExperimentResult res =
                limit_experiment(fam_i, {arms[0], arms[1], arms[2]}, detail::parse_grow(grow),
                                 start, maxv, tol);
            if (as_json) {
                json radii = json::array();
                for (const auto& iv : res.radii)
                    radii.push_back(detail::interval_json(iv));
                json j{{"params", res.params},
                       {"radii", radii},
                       {"limit", detail::interval_json(res.predicted_limit)},
                       {"limit_poly", detail::coeffs_json(res.predicted_limit_poly)},
                       {"monotone", res.monotone},
                       {"increasing", res.increasing},
                       {"inconclusive", res.inconclusive},
                       {"final_gap", res.final_gap}};
                out << j.dump() << '\n';
            } else {
                out << res.to_table();
            }
        } else if (c_mult->parsed()) {
            TreeExpr ast = parse_tree_expr(expr);
            const auto* jn = std::get_if<JoinNode>(&ast.node);
            if (!jn)
                throw invalid_spec("multiplicity needs a join(...) expression");
            if (q_coeffs.empty() == (q_phi == 0))
                throw invalid_spec("multiplicity needs exactly one of --q-coeffs or --q-phi");
            IntPolynomial q =
                q_phi ? cyclotomic(q_phi) : IntPolynomial::from_coeff_string(q_coeffs);
            std::vector<std::pair<Tree, int>> parts;
            for (const auto& [child, attach] : jn->parts)
                parts.emplace_back(elaborate(child), attach);
            MultiplicityCheck mc = multiplicity_check(parts, q);
            if (as_json) {
                json j{{"part_multiplicities", mc.part_multiplicities},
                       {"total", mc.total},
                       {"bound", mc.min_bound},
                       {"actual", mc.actual}};
                out << j.dump() << '\n';
            } else {
                out << "m_i:";
                for (int m : mc.part_multiplicities)
                    out << ' ' << m;
                out << "\nm: " << mc.total << "\nbound: " << mc.min_bound
                    << "\nactual: " << mc.actual << '\n';
            }
        } else if (c_verify->parsed()) {
            std::vector<verify::CheckResult> results;
            if (suite == "all")
                results = verify::run_all(jobs);
            else
                results.push_back(verify::run_suite(suite, jobs));
            // no timings here: identical invocations stay byte-identical
            int failures = 0;
            json jr = json::array();
            for (const auto& r : results) {
                failures += r.pass ? 0 : 1;
                if (as_json) {
                    jr.push_back(json{{"index", r.index},
                                      {"name", r.name},
                                      {"pass", r.pass},
                                      {"detail", r.detail}});
                } else {
                    char line[512];
                    std::snprintf(line, sizeof line, "%s %2d. %s (%s)\n", r.pass ? "PASS" : "FAIL",
                                  r.index, r.name.c_str(), r.detail.c_str());
                    out << line;
                }
            }
            if (as_json)
                out << jr.dump() << '\n';
            return failures == 0 ? 0 : 2;
        }
        return 0;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace cox::cli
