// qglab: command-line front end over the core library.
//
// Exit codes: 0 pass, 1 check failure, 2 input error, 3 internal inconsistency.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qglab/errors.hpp"
#include "qglab/export.hpp"
#include "qglab/io.hpp"

namespace {

using namespace qglab;

enum Exit { Pass = 0, CheckFailure = 1, InputError = 2, Internal = 3 };

struct RunConfig {
    std::string command;
    std::string input;
    std::string out;
    std::string format = "text";
    std::string strategy = "auto";
    std::string w_out;
    std::uint64_t seed = default_seed;
    Tolerances tol;
};

// FILE may name a JSON file or, when no such file exists, a built-in.
HopfData load_input(const std::string& input) {
    if (!std::filesystem::exists(input)) {
        for (const auto& name : builtin_names())
            if (name == input) return builtin(name);
    }
    return load_quantum_group(input);
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty())
        std::cout << text;
    else
        write_file(cfg.out, text);
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (cfg.format == f) return;
    throw qglab::Error(ErrorKind::ParseError, "format '" + cfg.format + "' is not available for " + cfg.command);
}

int cmd_validate(const RunConfig& cfg) {
    require_format(cfg, {"text", "json"});
    const ValidationReport report = validate(load_input(cfg.input), cfg.tol.axiom_tol);
    emit(cfg, cfg.format == "json" ? validation_json(report) : validation_text(report));
    if (const auto* f = report.first_failure()) {
        std::cerr << "qglab: axiom failed: " << f->name << "\n";
        return CheckFailure;
    }
    return Pass;
}

int cmd_examples(const RunConfig& cfg) {
    if (cfg.input.empty()) {
        for (const auto& name : builtin_names()) std::cout << name << "\n";
        return Pass;
    }
    emit(cfg, dump_quantum_group(builtin(cfg.input)));
    return Pass;
}

int cmd_idempotents(const RunConfig& cfg) {
    require_format(cfg, {"text", "json"});
    const auto g = QuantumGroup::create(load_input(cfg.input), cfg.tol);
    const Enumeration en = enumerate_idempotents(g, parse_strategy(cfg.strategy), cfg.tol, cfg.seed);
    const double t = cfg.tol.state_tol;
    emit(cfg, cfg.format == "json" ? enumeration_json(en, t) : enumeration_text(en, t));
    return Pass;
}

int cmd_lattice(const RunConfig& cfg) {
    const auto g = QuantumGroup::create(load_input(cfg.input), cfg.tol);
    Enumeration en = enumerate_idempotents(g, parse_strategy(cfg.strategy), cfg.tol, cfg.seed);
    const IdempotentLattice lat = build_lattice(std::move(en.states), cfg.tol);
    if (cfg.format == "json")
        emit(cfg, lattice_json(lat));
    else if (cfg.format == "dot")
        emit(cfg, lattice_dot(lat));
    else
        emit(cfg, lattice_text(lat));
    return Pass;
}

// The dual group goes to --out (stdout when absent); the convention report
// goes to stdout only when the group itself was written to a file.
int cmd_dual(const RunConfig& cfg) {
    require_format(cfg, {"text", "json"});
    const auto g = QuantumGroup::create(load_input(cfg.input), cfg.tol);
    const DualPair pair = dual(g, cfg.tol);
    emit(cfg, dump_quantum_group(pair.g_hat->data()));
    if (!cfg.w_out.empty()) write_file(cfg.w_out, matrix_json(pair.w()));
    if (!cfg.out.empty()) std::cout << (cfg.format == "json" ? convention_json(pair) : convention_text(pair));
    return Pass;
}

int cmd_check(const RunConfig& cfg) {
    require_format(cfg, {"text", "json"});
    const auto g = QuantumGroup::create(load_input(cfg.input), cfg.tol);
    CheckOptions opts;
    opts.tol = cfg.tol;
    opts.strategy = parse_strategy(cfg.strategy);
    opts.seed = cfg.seed;
    const auto results = run_checks(g, opts);
    emit(cfg, cfg.format == "json" ? checks_json(results) : checks_text(results));
    for (const auto& r : results)
        if (!r.pass) {
            std::cerr << "qglab: check failed: " << r.key << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
            return r.internal ? Internal : CheckFailure;
        }
    return Pass;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    if (const char* env = std::getenv("QGLAB_TOL")) {
        try {
            cfg.tol.state_tol = std::stod(env);
        } catch (const std::exception&) {
            std::cerr << "qglab: QGLAB_TOL is not a number: " << env << "\n";
            return InputError;
        }
    }

    CLI::App app{"Idempotent states, coideals and duality on finite quantum groups"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    auto common = [&](CLI::App* sub, bool needs_file) {
        sub->add_option("--tol", cfg.tol.state_tol, "tolerance for derived quantities")->check(CLI::PositiveNumber);
        sub->add_option("--axiom-tol", cfg.tol.axiom_tol, "tolerance for structure-constant axioms")->check(CLI::PositiveNumber);
        sub->add_option("--dedup-tol", cfg.tol.dedup_tol, "distance below which two states are identified")
            ->check(CLI::PositiveNumber);
        sub->add_option("--conv-tol", cfg.tol.conv_tol, "convergence tolerance for power limits")->check(CLI::PositiveNumber);
        sub->add_option("--n-max", cfg.tol.n_max, "iteration cap for power limits")->check(CLI::PositiveNumber);
        sub->add_option("--restarts", cfg.tol.restarts, "search restarts")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "seed for the restart stream");
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "dot", "text"}));
        sub->add_option("--out", cfg.out, "write output to PATH instead of stdout");
        sub->add_option("--strategy", cfg.strategy, "enumeration strategy")->check(CLI::IsMember({"auto", "catalog", "search"}));
        auto* file = sub->add_option("FILE", cfg.input, "quantum group JSON file or built-in name");
        if (needs_file) file->required();
    };

    struct Cmd {
        const char* name;
        const char* help;
        bool needs_file;
        int (*run)(const RunConfig&);
    };
    const Cmd cmds[] = {
        {"validate", "check the Hopf *-algebra axioms", true, cmd_validate},
        {"examples", "write a built-in quantum group as JSON (lists names without NAME)", false, cmd_examples},
        {"idempotents", "enumerate idempotent states", true, cmd_idempotents},
        {"lattice", "lattice of idempotent states and its Hasse diagram", true, cmd_lattice},
        {"dual", "dual quantum group and convention report", true, cmd_dual},
        {"check", "run the full invariant suite", true, cmd_check},
    };
    int (*run)(const RunConfig&) = nullptr;
    for (const Cmd& c : cmds) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        common(sub, c.needs_file);
        if (std::string(c.name) == "dual") sub->add_option("--w-out", cfg.w_out, "also write W as a dense complex matrix");
        sub->callback([&cfg, &run, c] {
            cfg.command = c.name;
            run = c.run;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Pass : InputError;
    }

    try {
        return run(cfg);
    } catch (const qglab::Error& e) {
        std::cerr << "qglab: " << e.what() << "\n";
        return is_input_error(e.kind()) ? InputError : Internal;
    } catch (const std::exception& e) {
        std::cerr << "qglab: internal error: " << e.what() << "\n";
        return Internal;
    }
}
