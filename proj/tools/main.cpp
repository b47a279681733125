// segrecalc: exact push-forward Segre classes of subschemes of P^n over a
// prime field, via randomized residual-intersection computations, plus
// empirical checks of the class identities the method relies on.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "segrecalc/errors.hpp"
#include "segrecalc/io.hpp"

namespace {

using namespace segrecalc;

void apply_budget_env() {
    const char* env = std::getenv("SEGRECALC_BUDGET");
    if (env == nullptr) return;
    std::string value(env);
    Budget& budget = resource_budget();
    std::size_t comma = value.find(',');
    try {
        budget.max_pairs = std::stoull(value.substr(0, comma));
        if (comma != std::string::npos)
            budget.max_degree = static_cast<std::uint32_t>(std::stoul(value.substr(comma + 1)));
    } catch (const std::exception&) {
        throw input_error("SEGRECALC_BUDGET must be 'PAIRS' or 'PAIRS,MAXDEGREE'");
    }
}

void emit(const RunConfig& config, const nlohmann::json& j, const std::string& text) {
    if (config.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int run_compute(const IdealFile& file, const RunConfig& config) {
    Ideal ideal = file.ideal();
    SegreClassVector s =
        segre_class(ideal, config.degree, config.trials_or(2), config.seed);
    emit(config, segre_to_json(s, file.modulus), segre_to_text(s, file.modulus));
    return 0;
}

int run_verify(const std::string& kind, const IdealFile& file, const RunConfig& config) {
    Ideal ideal = file.ideal();
    int d = config.degree.value_or(ideal.max_generator_degree());
    int trials = config.trials_or(3);
    VerificationReport report;
    if (kind == "main-a")
        report = verify_main_a(ideal, d, config.seed, trials);
    else if (kind == "main-b")
        report = verify_main_b(ideal, d, config.seed, trials);
    else if (kind == "b-prime")
        report = verify_b_prime(ideal, d, config.c, config.seed, trials);
    else
        throw input_error("unknown verify kind '" + kind + "' (main-a|main-b|b-prime)");
    emit(config, report_to_json(report, file.modulus), report.to_text());
    return report.pass ? 0 : 2;
}

int run_bertini(const IdealFile& file, const RunConfig& config) {
    HypersurfaceInput x = make_hypersurface(file.single_generator());
    VerificationReport report = verify_segre_bertini(x, config.seed, config.trials_or(3));
    nlohmann::json j = report_to_json(report, file.modulus);
    j["command"] = "bertini";
    emit(config, j, report.to_text());
    return report.pass ? 0 : 2;
}

int run_csm(const IdealFile& file, const RunConfig& config) {
    HypersurfaceInput x = make_hypersurface(file.single_generator());
    int trials = config.trials_or(2);
    CsmResult result = csm_hypersurface(x, config.seed, trials);
    int ambient = file.ring->nvars() - 1;
    nlohmann::json j = csm_to_json(result, ambient, x.degree, file.modulus, config.seed, trials);
    std::ostringstream text;
    text << "modulus = " << file.modulus << "\n";
    text << "degree = " << x.degree << "\n";
    text << "csm = " << result.csm.to_string() << "\n";
    text << "euler = " << result.euler << "\n";
    text << "char_p_caveat = true\n";
    emit(config, j, text.str());
    return 0;
}

int run_mult(const IdealFile& file, const RunConfig& config) {
    Ideal ideal = file.ideal();
    int trials = config.trials_or(2);
    long long mult = hilbert_samuel_sum(ideal, config.seed, trials);
    nlohmann::json j;
    j["command"] = "mult";
    j["modulus"] = file.modulus;
    j["seed"] = config.seed;
    j["trials"] = trials;
    j["multiplicity"] = mult;
    std::ostringstream text;
    text << "multiplicity = " << mult << "\n";
    emit(config, j, text.str());
    return 0;
}

int report_error(const RunConfig& config, int code, const std::string& kind,
                 const std::string& message) {
    if (config.json)
        std::cout << error_to_json(code, kind, message).dump(2) << "\n";
    else
        std::cerr << "error (" << kind << "): " << message << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Segre classes of subschemes of P^n over a prime field"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    long long seed_opt = 0;
    app.add_option("--seed", seed_opt, "base seed for all randomized choices");
    app.add_option("--trials", config.trials,
                   "independent agreement runs (default 2; verify commands 3)");
    std::uint32_t prime_opt = 0;
    auto* prime_flag = app.add_option("--prime", prime_opt, "override the file's modulus");
    int degree_opt = 0;
    auto* degree_flag =
        app.add_option("--degree", degree_opt, "linear-system degree (>= max generator degree)");
    app.add_flag("--json", config.json, "machine-readable JSON output");

    std::string file_compute, file_verify, file_bertini, file_csm, file_mult, verify_kind;

    CLI::App* cmd_compute = app.add_subcommand("compute", "push-forward Segre class of V(I)");
    cmd_compute->add_option("file", file_compute, "ideal file")->required();

    CLI::App* cmd_verify = app.add_subcommand("verify", "check a class identity on this input");
    cmd_verify->add_option("kind", verify_kind, "main-a | main-b | b-prime")->required();
    cmd_verify->add_option("file", file_verify, "ideal file")->required();
    cmd_verify->add_option("--c", config.c, "excess dimension for b-prime (default 0)");

    CLI::App* cmd_bertini =
        app.add_subcommand("bertini", "compare Sing(H ∩ X) with H ∩ Sing(X) for general H");
    cmd_bertini->add_option("file", file_bertini, "single-polynomial ideal file")->required();

    CLI::App* cmd_csm = app.add_subcommand("csm", "Chern-Schwartz-MacPherson class of V(F)");
    cmd_csm->add_option("file", file_csm, "single-polynomial ideal file")->required();

    CLI::App* cmd_mult = app.add_subcommand("mult", "multiplicity sum of a 0-dimensional scheme");
    cmd_mult->add_option("file", file_mult, "ideal file")->required();

    CLI11_PARSE(app, argc, argv);
    config.seed = static_cast<std::uint64_t>(seed_opt);
    if (!prime_flag->empty()) config.prime = prime_opt;
    if (!degree_flag->empty()) config.degree = degree_opt;

    try {
        apply_budget_env();
        if (cmd_compute->parsed())
            return run_compute(load_ideal_file(file_compute, config.prime), config);
        if (cmd_verify->parsed())
            return run_verify(verify_kind, load_ideal_file(file_verify, config.prime), config);
        if (cmd_bertini->parsed())
            return run_bertini(load_ideal_file(file_bertini, config.prime), config);
        if (cmd_csm->parsed()) return run_csm(load_ideal_file(file_csm, config.prime), config);
        if (cmd_mult->parsed()) return run_mult(load_ideal_file(file_mult, config.prime), config);
    } catch (const genericity_error& e) {
        return report_error(config, 2, "genericity", e.what());
    } catch (const resource_error& e) {
        return report_error(config, 3, "resource", e.what());
    } catch (const input_error& e) {
        return report_error(config, 1, "input", e.what());
    } catch (const std::exception& e) {
        return report_error(config, 1, "input", e.what());
    }
    return 0;
}
