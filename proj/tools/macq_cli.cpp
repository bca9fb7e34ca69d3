#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "macq/intertwiner.hpp"
#include "macq/macops.hpp"
#include "macq/suites.hpp"

using namespace macq;
using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Args {
    std::string lambda, mu, method = "eigen", route = "mat_elt", suite;
    std::optional<int> vars, k;
    bool generic = false, list = false, json = true;
    SuiteOptions suite_opt;
};

Signature dominant_arg(const std::string& text, const std::string& flag) {
    if (text.empty()) throw UsageError(flag + " is required");
    Signature s = parse_signature(text);
    if (!is_dominant(s)) throw UsageError(flag + " must be weakly decreasing");
    return s;
}

Signature lower_arg(const std::string& text, const Signature& lam) {
    Signature s = parse_signature(text);
    if (s.size() + 1 != lam.size()) throw UsageError("--mu must have one entry fewer than --lambda");
    return s;
}

ordered_json sym_terms(const SymLaurent& f) {
    ordered_json arr = ordered_json::array();
    for (const auto& [lam, c] : f.terms()) arr.push_back({{"m", format_signature(lam)}, {"coeff", c.str()}});
    return arr;
}

ordered_json run_poly(const Args& a) {
    Signature lam = dominant_arg(a.lambda, "--lambda");
    int n = a.vars.value_or(static_cast<int>(lam.size()));
    if (n < static_cast<int>(lam.size())) {
        for (size_t i = n; i < lam.size(); ++i)
            if (lam[i] != 0) throw UsageError("--vars is smaller than the number of nonzero parts");
        lam.resize(n);
    }
    lam.resize(n, 0);
    if (!is_dominant(lam)) throw UsageError("--lambda padded with zeros must be weakly decreasing");
    SymLaurent p;
    if (a.method == "eigen") p = macdonald_eigen(lam, n);
    else if (a.method == "branch") p = macdonald_branch(lam, n);
    else p = macdonald_gt(lam, n);
    ordered_json j{{"lambda", format_signature(lam)}, {"vars", n}, {"method", a.method}};
    if (a.k) {
        p = specialize(p, UnitMono::q(2), UnitMono::q(2 * *a.k));
        j["k"] = *a.k;
    } else {
        j["params"] = "generic";
    }
    j["terms"] = sym_terms(p);
    return j;
}

ordered_json run_psi(const Args& a) {
    Signature lam = dominant_arg(a.lambda, "--lambda");
    Signature mu = lower_arg(a.mu, lam);
    if (!interlaces(mu, lam)) throw UsageError("--mu does not interlace --lambda");
    if (a.k) return {{"value", psi_qnum(lam, mu, *a.k).str()}, {"route", "psi_qnum"}};
    return {{"value", psi_branch(lam, mu).str()}, {"route", "psi_branch"}};
}

ordered_json run_matelt(const Args& a) {
    if (!a.k) throw UsageError("matelt requires --k");
    Signature lam = dominant_arg(a.lambda, "--lambda");
    Signature mu = lower_arg(a.mu, lam);
    if (!in_window(mu, lam, *a.k)) throw UsageError("--mu is outside the window of --lambda at this --k");
    CoeffRat v;
    if (a.route == "mat_elt") v = mat_elt(mu, lam, *a.k);
    else if (a.route == "diag_sum") v = diag_coeff_sum(mu, lam, *a.k);
    else v = c_squared_chain(mu, lam, *a.k);
    return {{"value", v.str()}, {"route", a.route}};
}

ordered_json run_trace(const Args& a) {
    if (!a.k) throw UsageError("trace requires --k");
    Signature lam = dominant_arg(a.lambda, "--lambda");
    NPoly tr = trace_reconstruct(lam, *a.k);
    ordered_json arr = ordered_json::array();
    for (const auto& [e, c] : tr.terms()) arr.push_back({{"x", format_signature(e)}, {"coeff", c.str()}});
    return {{"lambda", format_signature(lam)}, {"k", *a.k}, {"terms", arr}};
}

ordered_json run_verify(const Args& a, bool& pass) {
    if (a.list) {
        ordered_json arr = ordered_json::array();
        for (const auto& s : suite_catalog()) arr.push_back({{"name", s.name}, {"description", s.description}});
        return {{"suites", arr}};
    }
    if (a.suite.empty()) throw UsageError("verify requires --suite or --list");
    if (a.suite != "all") {
        Report r = run_suite(a.suite, a.suite_opt);
        pass = r.all_pass();
        return r.to_json();
    }
    ordered_json arr = ordered_json::array();
    for (const auto& s : suite_catalog()) {
        Report r = run_suite(s.name, a.suite_opt);
        pass = pass && r.all_pass();
        arr.push_back(r.to_json());
    }
    return {{"suite", "all"}, {"suites", arr}, {"pass", pass}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Macdonald polynomials, intertwiner matrix elements and verification suites"};
    app.require_subcommand(1);
    Args a;
    auto add_k = [&](CLI::App* sub, bool allow_generic) {
        auto* kopt = sub->add_option("--k", a.k, "t = q^k specialization (positive integer)")->check(CLI::PositiveNumber);
        if (allow_generic) sub->add_flag("--generic", a.generic, "generic (q, t)")->excludes(kopt);
    };
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", a.json, "JSON output (default and only format)"); };

    auto* poly = app.add_subcommand("poly", "Macdonald polynomial P_lam");
    poly->add_option("--lambda", a.lambda, "signature, comma-separated")->required();
    poly->add_option("--vars", a.vars, "number of variables")->check(CLI::PositiveNumber);
    poly->add_option("--method", a.method, "construction")->check(CLI::IsMember({"eigen", "branch", "gt"}));
    add_k(poly, true);
    add_json(poly);

    auto* psi = app.add_subcommand("psi", "branching coefficient psi_{lam/mu}");
    psi->add_option("--lambda", a.lambda)->required();
    psi->add_option("--mu", a.mu)->required();
    add_k(psi, true);
    add_json(psi);

    auto* matelt = app.add_subcommand("matelt", "diagonal matrix element c(mu, lam)");
    matelt->add_option("--lambda", a.lambda)->required();
    matelt->add_option("--mu", a.mu)->required();
    matelt->add_option("--route", a.route, "mat_elt, diag_sum or cg_sq (squared)")
        ->check(CLI::IsMember({"mat_elt", "diag_sum", "cg_sq"}));
    add_k(matelt, false);
    add_json(matelt);

    auto* trace = app.add_subcommand("trace", "trace reconstruction from matrix elements");
    trace->add_option("--lambda", a.lambda)->required();
    add_k(trace, false);
    add_json(trace);

    auto* verify = app.add_subcommand("verify", "run named verification suites");
    verify->add_option("--suite", a.suite, "suite name or all");
    verify->add_flag("--list", a.list, "print the suite catalog");
    verify->add_option("--n", a.suite_opt.n)->check(CLI::PositiveNumber);
    verify->add_option("--l", a.suite_opt.l)->check(CLI::PositiveNumber);
    verify->add_option("--k", a.suite_opt.k)->check(CLI::PositiveNumber);
    verify->add_option("--maxdeg", a.suite_opt.maxdeg)->check(CLI::NonNegativeNumber);
    verify->add_option("--samples", a.suite_opt.samples)->check(CLI::PositiveNumber);
    verify->add_option("--seed", a.suite_opt.seed);
    add_json(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        bool pass = true;
        ordered_json out;
        if (poly->parsed()) out = run_poly(a);
        else if (psi->parsed()) out = run_psi(a);
        else if (matelt->parsed()) out = run_matelt(a);
        else if (trace->parsed()) out = run_trace(a);
        else out = run_verify(a, pass);
        std::cout << out.dump() << "\n";
        return pass ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
