#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <string>

#include "nonarch/constants.hpp"
#include "nonarch/derivations.hpp"
#include "nonarch/expr.hpp"
#include "nonarch/growth_number.hpp"
#include "nonarch/laws.hpp"
#include "nonarch/lc_number.hpp"
#include "nonarch/newton.hpp"

namespace {

using namespace nonarch;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitEvalError = 2;
constexpr int kExitCheckFailed = 3;
constexpr int kExitPrecision = 4;

std::string default_backend() {
    const char* env = std::getenv("NONARCH_DEFAULT_BACKEND");
    if (env && (std::string(env) == "lc" || std::string(env) == "seq")) return env;
    return "lc";
}

BackendKind to_backend(const std::string& name) {
    return name == "seq" ? BackendKind::seq : BackendKind::lc;
}

int run_eval(const std::string& text, const std::string& backend, long order, int depth,
             const std::string& format) {
    EvalOptions opt;
    opt.backend = to_backend(backend);
    opt.order = order;
    opt.depth = depth;
    EvalOutcome out = evaluate(*parse_expr(text), opt);
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["kind"] = out.kind;
        doc["value"] = out.value;
        if (out.kind == "value") doc["class"] = out.classification;
        std::cout << doc.dump(2) << "\n";
    } else if (out.kind == "value") {
        std::cout << "value: " << out.value << "\n";
        std::cout << "class: " << out.classification << "\n";
    } else {
        std::cout << out.value << "\n";
    }
    return kExitOk;
}

int run_derive(const std::string& name, const std::string& v_text, long k,
               const std::string& backend, int depth, const std::string& format) {
    Rational v = Rational::parse(v_text);
    Transcript t;
    if (to_backend(backend) == BackendKind::lc) {
        if (name == "exp") t = exp_derivation<LcNumber>(v, k, depth);
        else if (name == "sincos") t = sincos_derivation<LcNumber>(v, k, depth);
        else t = euler_formula_derivation<LcNumber>(v, k, depth);
    } else {
        if (name == "exp") t = exp_derivation<GrowthNumber>(v, k, depth);
        else if (name == "sincos") t = sincos_derivation<GrowthNumber>(v, k, depth);
        else t = euler_formula_derivation<GrowthNumber>(v, k, depth);
    }
    std::cout << (format == "json" ? t.render_json() : t.render_text());
    return t.passed() ? kExitOk : kExitCheckFailed;
}

template <FieldBackend F>
int run_laws_on(std::uint64_t seed, unsigned long trials, int depth, bool allow_inconclusive,
                const std::string& format) {
    std::vector<LawReport> reports = run_all_laws<F>(seed, trials, depth, allow_inconclusive);
    bool all_pass = true;
    if (format == "json") {
        std::string out = "[\n";
        for (size_t i = 0; i < reports.size(); ++i) {
            out += reports[i].to_json();
            if (i + 1 < reports.size()) out += ",";
            out += "\n";
            all_pass = all_pass && reports[i].passed();
        }
        out += "]\n";
        std::cout << out;
    } else {
        for (const auto& r : reports) {
            std::cout << r.line() << "\n";
            if (!r.witnesses.empty()) std::cout << "  witness: " << r.witnesses.front() << "\n";
            for (const auto& f : r.failures) std::cout << "  counterexample: " << f << "\n";
            if (r.inconclusive > 0)
                std::cout << "  inconclusive trials: " << r.inconclusive << "\n";
            all_pass = all_pass && r.passed();
        }
        std::cout << (all_pass ? "ALL LAWS PASS" : "LAW FAILURES") << "\n";
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact non-Archimedean arithmetic and replayed classical derivations"};
    app.require_subcommand(1);

    // eval
    std::string expr_text, backend = default_backend(), format = "text";
    long order = 16;
    int depth = 16;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an expression over a backend");
    eval_cmd->add_option("expr", expr_text, "expression, e.g. \"st((N-1)/N)\"")->required();
    eval_cmd->add_option("--backend", backend, "lc | seq")
        ->check(CLI::IsMember({"lc", "seq"}));
    eval_cmd->add_option("--order", order, "star-function Taylor order (default 16)");
    eval_cmd->add_option("--depth", depth, "inverse/root truncation depth (default 16)");
    eval_cmd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    // derive
    std::string derive_name, v_text = "1";
    long derive_k = 1;
    CLI::App* derive_cmd = app.add_subcommand("derive", "replay a classical derivation");
    derive_cmd->add_option("name", derive_name, "exp | sincos | euler-formula")
        ->required()
        ->check(CLI::IsMember({"exp", "sincos", "euler-formula"}));
    derive_cmd->add_option("--v", v_text, "rational parameter, e.g. 1 or -1/2")->required();
    derive_cmd->add_option("--k", derive_k, "truncation order K")->required();
    derive_cmd->add_option("--backend", backend, "lc | seq")->check(CLI::IsMember({"lc", "seq"}));
    derive_cmd->add_option("--depth", depth, "inverse truncation depth (default 16)");
    derive_cmd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    // newton
    CLI::App* newton_cmd = app.add_subcommand("newton", "arc-sine pipeline: expansion, integration, reversion");

    // laws
    std::uint64_t seed = 1;
    unsigned long trials = 1000;
    bool allow_inconclusive = false;
    CLI::App* laws_cmd = app.add_subcommand("laws", "run the ordered-field/infinitesimal law registry");
    laws_cmd->add_option("--backend", backend, "lc | seq")->check(CLI::IsMember({"lc", "seq"}));
    laws_cmd->add_option("--seed", seed, "sampler seed (default 1)");
    laws_cmd->add_option("--trials", trials, "trials per law (default 1000)");
    laws_cmd->add_option("--depth", depth, "inverse truncation depth (default 16)");
    laws_cmd->add_flag("--allow-inconclusive", allow_inconclusive,
                       "downgrade precision-exhausted trials to warnings");
    laws_cmd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    // constants
    std::string constant_name;
    unsigned digits = 10;
    CLI::App* const_cmd = app.add_subcommand("constants", "certified decimal constants");
    const_cmd->add_option("name", constant_name, "e | pi | ln10")
        ->required()
        ->check(CLI::IsMember({"e", "pi", "ln10"}));
    const_cmd->add_option("--digits", digits, "certified digits after the point")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval_cmd->parsed()) return run_eval(expr_text, backend, order, depth, format);
        if (derive_cmd->parsed()) return run_derive(derive_name, v_text, derive_k, backend, depth, format);
        if (newton_cmd->parsed()) {
            std::cout << nonarch::newton_report();
            return kExitOk;
        }
        if (laws_cmd->parsed()) {
            return to_backend(backend) == BackendKind::lc
                       ? run_laws_on<LcNumber>(seed, trials, depth, allow_inconclusive, format)
                       : run_laws_on<GrowthNumber>(seed, trials, depth, allow_inconclusive, format);
        }
        if (const_cmd->parsed()) {
            std::cout << constant_by_name(constant_name, digits).digits << "\n";
            return kExitOk;
        }
    } catch (const nonarch::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == nonarch::errc::precision_exhausted ? kExitPrecision : kExitEvalError;
    }
    return kExitUsage;
}
