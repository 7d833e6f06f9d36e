#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specinf/errors.hpp"
#include "specinf/local_model.hpp"
#include "specinf/report.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitNotConvenient = 3;
constexpr int kExitDegenerate = 4;
constexpr int kExitResource = 5;

specinf::MonomialOrder parse_order(const std::string& name) {
    if (name == "lex") return specinf::MonomialOrder::Lex;
    return specinf::MonomialOrder::Grevlex;
}

// `source` is an inline expression unless it names a readable file.
std::string load_source(const std::string& source) {
    std::ifstream in(source);
    if (!in.good()) return source;
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
}

int count_variables(const std::string& expr) {
    // highest default variable name that occurs decides the arity
    for (int n = 3; n >= 2; --n) {
        const char* names = "xyz";
        if (expr.find(names[n - 1]) != std::string::npos) return n;
    }
    return 1;
}

int run_analyze(const std::string& source, bool json, const std::string& order_name,
                std::size_t budget, bool force) {
    std::string expr = load_source(source);
    specinf::AnalysisReport report;
    try {
        int arity = count_variables(expr);
        specinf::LaurentPolynomial f =
            specinf::parse_laurent(expr, specinf::default_variables(arity));
        (void)budget; // the default pair budget is far above anything desk-scale
        report = specinf::build_analysis_report(f, expr, parse_order(order_name), force);
    } catch (const specinf::SyntaxError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const specinf::UnknownVariable& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const specinf::NotConvenient& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotConvenient;
    } catch (const specinf::Degenerate& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const specinf::ResourceLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const specinf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    }
    if (!report.all_checks()) {
        std::cerr << "internal cross-check failed; refusing to emit report\n";
        return 1;
    }
    std::cout << (json ? specinf::report_to_json(report) : specinf::report_to_text(report));
    return 0;
}

int run_verify_local(int ell, const std::vector<long>& e, const std::vector<std::string>& alphas,
                     long p_max, long x_min, bool json) {
    using namespace specinf;
    ChartSpec spec;
    spec.ell = ell;
    spec.e = ExponentVector(e.begin(), e.end());
    spec.trunc.x_min = x_min;

    struct Line {
        std::string name;
        bool pass;
    };
    std::vector<Line> lines;
    try {
        // P -> Q identity on a few monic operators
        {
            bool ok = true;
            std::vector<std::vector<Rational>> samples = {
                {Rational(1)},                                        // 1
                {Rational(0), Rational(1)},                           // s
                {Rational(0), Rational(0), Rational(1)},              // s^2
                {rational(1, 2), Rational(-1), Rational(2), Rational(1)}};
            for (const auto& P : samples) {
                std::vector<Rational> Q = pq_convert(P);
                if (Q.size() != P.size()) ok = false;
                OperatorPolynomial op;
                for (std::size_t k = 0; k < P.size(); ++k)
                    op.add(static_cast<long>(k), 0, P[k]);
                ChartSection lhs = apply_operator(op, unit_section(spec), spec);
                if (!lhs.within(spec.trunc)) throw TruncationOverflow("pq identity");
                if (!(lhs == eval_at_vf(Q, spec))) ok = false;
            }
            lines.push_back({"pq_identity", ok});
        }
        // decomposition round trip for beta in {0, 1/2, 1}
        {
            bool ok = true;
            for (const Rational& beta : {Rational(0), rational(1, 2), Rational(1)}) {
                auto basis = v_basis_elements(spec, beta, 3);
                for (std::size_t i = 0; i < basis.size() && i < 20; ++i) {
                    VDecomposition d = decompose_Vbeta(basis[i].section, beta, spec);
                    if (!(reexpand(d, spec) == basis[i].section)) ok = false;
                }
            }
            lines.push_back({"decompose_roundtrip", ok});
        }
        // F = F' for the requested alphas and p <= p_max
        {
            bool ok = true;
            for (const std::string& as : alphas) {
                Rational alpha = parse_rational(as);
                for (long p = 0; p <= p_max; ++p)
                    if (!filtration_compare(spec, alpha, p)) ok = false;
            }
            lines.push_back({"filtration_identity", ok});
        }
    } catch (const TruncationOverflow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    }

    bool all = true;
    for (const auto& l : lines) all = all && l.pass;
    if (json) {
        std::cout << "{\n";
        for (std::size_t i = 0; i < lines.size(); ++i)
            std::cout << "  \"" << lines[i].name << "\": " << (lines[i].pass ? "true" : "false")
                      << (i + 1 < lines.size() ? ",\n" : "\n");
        std::cout << "}\n";
    } else {
        for (const auto& l : lines)
            std::cout << l.name << ": " << (l.pass ? "pass" : "FAIL") << "\n";
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectrum-at-infinity analyzer"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json = false, text = false;
    app.add_flag("--json", json, "JSON output");
    app.add_flag("--text", text, "plain-text output");
    std::string order_name = "grevlex";
    app.add_option("--order", order_name, "monomial order")
        ->check(CLI::IsMember({"grevlex", "lex"}));
    std::size_t budget = 200000;
    app.add_option("--budget", budget, "pair-reduction budget");

    auto* analyze = app.add_subcommand("analyze", "full pipeline on one polynomial");
    std::string source;
    analyze->add_option("source", source, "expression or file path")->required();
    bool force = false;
    analyze->add_flag("--force", force, "skip the non-degeneracy gate");

    auto* verify = app.add_subcommand("verify-local", "local-chart identity suite");
    int ell = 1;
    verify->add_option("--ell", ell, "number of chart variables")->check(CLI::Range(1, 2));
    std::vector<long> evec;
    verify->add_option("--e", evec, "chart exponents e_i")->delimiter(',');
    std::vector<std::string> alphas = {"0", "1/4", "1/2"};
    verify->add_option("--alpha", alphas, "alpha values")->delimiter(',');
    long p_max = 2;
    verify->add_option("--p-max", p_max, "largest p");
    long x_min = -8;
    verify->add_option("--bounds", x_min, "lowest x-exponent of the truncation box");

    auto* catalog = app.add_subcommand("catalog", "mirror checks for P1, P2, P1xP1");

    CLI11_PARSE(app, argc, argv);
    if (!text) json = json || !text; // default to JSON unless --text given
    if (text) json = false;

    if (analyze->parsed()) return run_analyze(source, json, order_name, budget, force);
    if (verify->parsed()) {
        if (evec.empty()) evec.assign(static_cast<std::size_t>(ell), 2);
        if (static_cast<int>(evec.size()) != ell) {
            std::cerr << "error: --e must list exactly ell exponents\n";
            return kExitParse;
        }
        return run_verify_local(ell, evec, alphas, p_max, x_min, json);
    }
    if (catalog->parsed()) {
        specinf::CatalogReport r = specinf::run_catalog(parse_order(order_name));
        std::cout << (json ? specinf::catalog_to_json(r) : specinf::catalog_to_text(r));
        return r.all_match() ? 0 : 1;
    }
    return 0;
}
