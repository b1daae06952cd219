// Command-line surface: thin argument parsing over the command
// implementations in scenarios.hpp.  Exit status: 0 verdict success,
// 2 verdict failure, 1 input or usage error.

#include "framepair/framepair.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

namespace {

struct CliConfig {
    std::vector<std::string> inputs;
    double tol = framepair::kDefaultRankTol;
    double kappa_max = framepair::kDefaultKappaMax;
    long long levels = 0;   // 0 = command default
    long long seed = 0;
    long long dim = 0;      // 0 = command default
    std::string out;
    std::string curves_out;
    std::string example_name;
};

void add_common_options(CLI::App* sub, CliConfig* cfg) {
    sub->add_option("-i,--input", cfg->inputs, "input file (repeatable)");
    sub->add_option("--tol", cfg->tol, "relative rank tolerance (> 0)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--kappa-max", cfg->kappa_max, "admissible condition number (>= 1)")
        ->check(CLI::Range(1.0, 1e300));
    sub->add_option("--levels", cfg->levels, "refinement level count (>= 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg->seed, "seed for randomized pieces");
    sub->add_option("--dim", cfg->dim, "model dimension (>= 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("-o,--out", cfg->out, "write the report here instead of stdout");
    sub->add_option("--curves", cfg->curves_out, "also write curve series as CSV");
}

framepair::VectorFamily load(const std::string& path) {
    return framepair::io::read_family(path);
}

void expect_inputs(const CliConfig& cfg, std::size_t n, const char* what) {
    if (cfg.inputs.size() != n)
        framepair::fail(std::string(what) + ": expected exactly " + std::to_string(n) +
                        " --input file(s), got " + std::to_string(cfg.inputs.size()));
}

framepair::ScenarioOptions scenario_options(const CliConfig& cfg) {
    framepair::ScenarioOptions opts;
    opts.dim = Eigen::Index(cfg.dim);
    opts.levels = Eigen::Index(cfg.levels);
    opts.tol = cfg.tol;
    opts.kappa_max = cfg.kappa_max;
    opts.seed = cfg.seed;
    if (!cfg.inputs.empty()) opts.input = cfg.inputs.front();
    return opts;
}

int deliver(const framepair::CommandOutcome& outcome, const CliConfig& cfg) {
    if (cfg.out.empty()) {
        const std::string text = outcome.report.render();
        std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
        outcome.report.write(cfg.out);
    }
    if (!cfg.curves_out.empty()) framepair::emit_curves(outcome.report, cfg.curves_out);
    return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Finite-model analysis of vector families: frame bounds, reproducing-pair "
        "checks, partner construction, refinement classification, and a gallery of "
        "example systems."};
    app.require_subcommand(1);

    CliConfig cfg;
    CLI::App* cmd_classify = app.add_subcommand(
        "classify", "classify a refinement sequence of family files (coarse to fine)");
    CLI::App* cmd_pair = app.add_subcommand(
        "pair-check", "verify that two family files form a reproducing pair");
    CLI::App* cmd_partner = app.add_subcommand(
        "partner", "construct the minimal-norm reproducing partner of a family file");
    CLI::App* cmd_kernel = app.add_subcommand(
        "kernel", "analyze the reproducing-kernel projector of a verified pair");
    CLI::App* cmd_example = app.add_subcommand(
        "example", "run a named example scenario with its default check battery");
    for (CLI::App* sub : {cmd_classify, cmd_pair, cmd_partner, cmd_kernel, cmd_example})
        add_common_options(sub, &cfg);
    cmd_example->add_option("name", cfg.example_name, "scenario name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        framepair::CommandOutcome outcome{framepair::Report(""), 0};
        if (cmd_pair->parsed()) {
            expect_inputs(cfg, 2, "pair-check");
            outcome = framepair::pair_check_command(load(cfg.inputs[0]), load(cfg.inputs[1]),
                                                    cfg.kappa_max, cfg.tol);
        } else if (cmd_partner->parsed()) {
            expect_inputs(cfg, 1, "partner");
            outcome = framepair::partner_command(load(cfg.inputs[0]), cfg.tol);
        } else if (cmd_kernel->parsed()) {
            expect_inputs(cfg, 2, "kernel");
            outcome = framepair::kernel_command(load(cfg.inputs[0]), load(cfg.inputs[1]),
                                                cfg.kappa_max, cfg.tol);
        } else if (cmd_classify->parsed()) {
            if (cfg.inputs.empty())
                framepair::fail("classify: at least one --input family file required");
            std::vector<framepair::VectorFamily> levels;
            levels.reserve(cfg.inputs.size());
            for (const std::string& path : cfg.inputs) levels.push_back(load(path));
            outcome = framepair::classify_command(levels, cfg.tol);
        } else {
            outcome = framepair::example_command(cfg.example_name, scenario_options(cfg));
        }
        return deliver(outcome, cfg);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
