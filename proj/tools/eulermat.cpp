#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "eulermat/catalog.hpp"
#include "eulermat/identity_suite.hpp"
#include "eulermat/serialize.hpp"

namespace {

using namespace eulermat;

// Exit 2: the invocation itself is wrong (unknown flag value, unknown name).
// Exit 1: the request is well-formed but the computation rejects it.
struct FlagError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

catalog::Param parse_param(const char* flag, const std::string& text) {
    if (text == "sym") return catalog::Param::sym();
    try {
        return catalog::Param::val(Rational::parse(text));
    } catch (const std::exception&) {
        throw FlagError(std::string("--") + flag + ": expected a rational or 'sym', got '" +
                        text + "'");
    }
}

struct GenArgs {
    std::string kind;
    int n = 0;
    std::string x, y, alpha, format = "pretty";
    int m = 0, k = 0;
    CLI::Option *x_opt = nullptr, *y_opt = nullptr, *alpha_opt = nullptr, *m_opt = nullptr,
                *k_opt = nullptr;
};

void add_gen_flags(CLI::App* cmd, GenArgs& a) {
    cmd->add_option("--kind", a.kind, "matrix kind (kebab-case)")->required();
    cmd->add_option("--n", a.n, "matrix size parameter")->required();
    a.x_opt = cmd->add_option("--x", a.x, "x parameter: rational or 'sym'");
    a.y_opt = cmd->add_option("--y", a.y, "y parameter: rational or 'sym'");
    a.alpha_opt = cmd->add_option("--alpha", a.alpha, "alpha parameter: rational or 'sym'");
    a.m_opt = cmd->add_option("--m", a.m, "integer order parameter");
    a.k_opt = cmd->add_option("--k", a.k, "integer index parameter");
    cmd->add_option("--format", a.format, "pretty|json|csv|latex");
}

catalog::MatrixSpec make_spec(const GenArgs& a) {
    auto kind = catalog::kind_from_name(a.kind);
    if (!kind) throw FlagError("--kind: unknown kind '" + a.kind + "'");
    if (a.n < 0) throw FlagError("--n: must be non-negative");
    catalog::MatrixSpec s{*kind, static_cast<unsigned>(a.n)};
    if (a.x_opt->count()) s.x = parse_param("x", a.x);
    if (a.y_opt->count()) s.y = parse_param("y", a.y);
    if (a.alpha_opt->count()) s.alpha = parse_param("alpha", a.alpha);
    if (a.m_opt->count()) {
        if (a.m < 0) throw FlagError("--m: must be non-negative");
        s.m = static_cast<unsigned>(a.m);
    }
    if (a.k_opt->count()) {
        if (a.k < 0) throw FlagError("--k: must be non-negative");
        s.k = static_cast<unsigned>(a.k);
    }
    return s;
}

void print_matrix(const Mat& m, const catalog::MatrixSpec& spec, const std::string& format) {
    serialize::OutputFormat f;
    try {
        f = serialize::format_from_name(format);
    } catch (const std::exception&) {
        throw FlagError("--format: expected pretty|json|csv|latex, got '" + format + "'");
    }
    switch (f) {
        case serialize::OutputFormat::Pretty: std::cout << serialize::to_pretty(m); break;
        case serialize::OutputFormat::Json: std::cout << serialize::to_json(m, spec); break;
        case serialize::OutputFormat::Csv: std::cout << serialize::to_csv(m); break;
        case serialize::OutputFormat::Latex: std::cout << serialize::to_latex(m); break;
    }
}

int run_gen(const GenArgs& a, bool invert) {
    catalog::MatrixSpec spec = make_spec(a);
    Mat m = catalog::build(spec);
    if (invert) m = m.inverse_unit_lower();
    print_matrix(m, spec, a.format);
    return 0;
}

struct VerifyArgs {
    std::string check = "all";
    int n_max = 8;
    int trials = 3;
    std::uint64_t seed = 42;
    bool symbolic = false;
    std::string report;
};

nlohmann::json report_json(const VerifyArgs& a, const std::vector<suite::CheckResult>& results) {
    nlohmann::json doc;
    doc["params"] = {{"n_max", a.n_max},
                     {"trials", a.trials},
                     {"seed", a.seed},
                     {"symbolic", a.symbolic},
                     {"check", a.check}};
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json item;
        item["check"] = suite::check_name(r.id);
        item["passed"] = r.passed;
        item["sub_identity_count"] = r.sub_count;
        if (!r.sub_identity.empty()) item["failed_sub_identity"] = r.sub_identity;
        if (r.counterexample) {
            item["counterexample"] = {{"params", r.counterexample->params},
                                      {"i", r.counterexample->i},
                                      {"j", r.counterexample->j},
                                      {"lhs", r.counterexample->lhs},
                                      {"rhs", r.counterexample->rhs}};
        }
        item["notes"] = r.notes;
        arr.push_back(item);
    }
    doc["results"] = arr;
    return doc;
}

int run_verify(const VerifyArgs& a) {
    if (a.n_max < 0) throw FlagError("--n-max: must be non-negative");
    if (a.trials < 1) throw FlagError("--trials: must be positive");
    std::optional<std::vector<suite::CheckId>> selection;
    if (a.check != "all") {
        auto id = suite::check_from_name(a.check);
        if (!id) {
            std::cerr << "unknown check '" << a.check << "'; valid names:\n";
            for (const auto& info : suite::list_checks()) std::cerr << "  " << info.name << "\n";
            return 2;
        }
        selection = std::vector<suite::CheckId>{*id};
    }
    suite::CheckParams params;
    params.n = static_cast<unsigned>(a.n_max);
    params.trials = static_cast<unsigned>(a.trials);
    params.seed = a.seed;
    params.symbolic_alpha = a.symbolic;
    params.symbolic_x = a.symbolic;
    auto results = suite::run_suite(params, selection ? &*selection : nullptr);
    bool all_passed = true;
    const suite::CheckResult* first_failed = nullptr;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << suite::check_name(r.id) << " "
                  << r.sub_count << "\n";
        if (!r.passed) {
            all_passed = false;
            if (!first_failed) first_failed = &r;
        }
    }
    if (!a.report.empty()) {
        std::ofstream out(a.report);
        if (!out) throw FlagError("--report: cannot open '" + a.report + "' for writing");
        out << report_json(a, results).dump(2) << "\n";
    }
    if (first_failed && first_failed->counterexample) {
        const auto& ce = *first_failed->counterexample;
        std::cerr << "counterexample for " << suite::check_name(first_failed->id) << " ("
                  << first_failed->sub_identity << "):\n  " << ce.params << "\n  entry (" << ce.i
                  << "," << ce.j << "): " << ce.lhs << " != " << ce.rhs << "\n";
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact constructor and verifier for Euler-family structured matrices"};
    app.require_subcommand(1);

    GenArgs gen_args, invert_args;
    VerifyArgs verify_args;
    CLI::App* gen = app.add_subcommand("gen", "print a matrix from the catalog");
    add_gen_flags(gen, gen_args);
    CLI::App* invert = app.add_subcommand("invert", "print the exact inverse of a catalog matrix");
    add_gen_flags(invert, invert_args);
    CLI::App* verify = app.add_subcommand("verify", "run the identity verification suite");
    verify->add_option("--check", verify_args.check, "check name or 'all'");
    verify->add_option("--n-max", verify_args.n_max, "matrix size bound");
    verify->add_option("--trials", verify_args.trials, "random draws per check");
    verify->add_option("--seed", verify_args.seed, "random seed");
    verify->add_flag("--symbolic", verify_args.symbolic, "use formal x and alpha");
    verify->add_option("--report", verify_args.report, "write a JSON report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_gen(gen_args, false);
        if (invert->parsed()) return run_gen(invert_args, true);
        return run_verify(verify_args);
    } catch (const FlagError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
