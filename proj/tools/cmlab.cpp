#include "cmlab/errors.hpp"
#include "cmlab/runner.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct CommonOpts {
    std::string format = "text";
    std::uint64_t budget = 0;
    int jobs = 1;
    int bound = 8;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--budget", o.budget,
                    "reduction-step budget per check (0 = engine default)")
        ->envname("CMLAB_BUDGET");
    cmd->add_option("--jobs", o.jobs, "checks run in parallel")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    cmd->add_option("--bound", o.bound,
                    "default search depth for bounded weak-proregularity checks")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
}

int run_and_emit(const cmlab::cli::Scenario& sc, const CommonOpts& o) {
    cmlab::cli::RunOptions opts;
    opts.budget = o.budget;
    opts.jobs = o.jobs;
    opts.wpr_bound = o.bound;
    cmlab::cli::RunResult r = cmlab::cli::run_scenario(sc, opts);
    std::cout << (o.format == "json" ? cmlab::cli::emit_json(r)
                                     : cmlab::cli::emit_text(r));
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cmlab: exact sequence and depth checks over finitely presented "
                 "algebras and curated non-Noetherian model rings"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run a scenario file or bundled scenario");
    std::string target;
    run->add_option("scenario", target, "path to a scenario file, or a bundled name")
        ->required();
    CommonOpts ro;
    add_common(run, ro);

    auto* check = app.add_subcommand("check", "run one inline scenario expression");
    std::string expr;
    check
        ->add_option("expr", expr,
                     "e.g. \"QQ[x,y]; check sps (x, y)\" or \"valuation(rank=2); "
                     "example37(n=2)\"")
        ->required();
    CommonOpts co;
    add_common(check, co);

    app.add_subcommand("list-scenarios", "list the bundled scenarios");

    CLI11_PARSE(app, argc, argv);

    if (app.got_subcommand("list-scenarios")) {
        for (const auto& [name, text] : cmlab::cli::bundled_scenarios())
            std::cout << name << "\n";
        return 0;
    }

    try {
        if (app.got_subcommand("run")) {
            std::string text;
            if (const std::string* b = cmlab::cli::find_bundled(target)) {
                text = *b;
            } else {
                std::ifstream in(target);
                if (!in) {
                    std::cerr << "cmlab: no bundled scenario or readable file named '"
                              << target << "'\n";
                    return 2;
                }
                std::ostringstream ss;
                ss << in.rdbuf();
                text = ss.str();
            }
            return run_and_emit(cmlab::cli::parse_scenario(text), ro);
        }
        return run_and_emit(cmlab::cli::parse_inline(expr), co);
    } catch (const cmlab::Error& e) {
        std::cerr << "cmlab: " << e.what() << "\n";
        return 2;
    }
}
