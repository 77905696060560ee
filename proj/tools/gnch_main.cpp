#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "gnch/config.hpp"
#include "gnch/errors.hpp"
#include "gnch/experiments.hpp"
#include "gnch/params.hpp"

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

void print_outcome(const gnch::ExperimentOutcome& out) {
    for (const gnch::Verdict& v : out.verdicts)
        std::printf("  [%s] %-24s %s  (%s %s)\n", v.pass ? "PASS" : "FAIL", v.name.c_str(),
                    fmt(v.measured).c_str(), v.relation.c_str(), fmt(v.threshold).c_str());
    std::printf("experiment %s: %s\n", out.experiment.c_str(), out.pass ? "PASS" : "FAIL");
}

int cmd_run(const std::string& path) {
    const gnch::ExperimentConfig cfg = gnch::parse_config(path);
    const gnch::ExperimentOutcome out = gnch::run_experiment(cfg);
    std::printf("%s (%s)\n", out.experiment.c_str(), path.c_str());
    print_outcome(out);
    if (!cfg.run.out_dir.empty())
        std::printf("artifacts written under %s/\n", cfg.run.out_dir.c_str());
    return out.pass ? 0 : 1;
}

int cmd_list() {
    for (const gnch::ExperimentInfo& e : gnch::experiment_registry()) {
        std::printf("%s\n    %s\n    thresholds:", e.name.c_str(), e.summary.c_str());
        for (const std::string& t : e.thresholds) std::printf(" %s", t.c_str());
        std::printf("\n");
    }
    return 0;
}

int cmd_validate(const std::string& path) {
    const gnch::ExperimentConfig cfg = gnch::parse_config(path);
    gnch::validate_config(cfg);
    std::printf("%s: valid configuration for experiment '%s'\n", path.c_str(),
                cfg.experiment.c_str());
    for (const gnch::RegimeParams& p : gnch::sweep_points(cfg)) {
        const gnch::RegimeReport rep = gnch::check_regime(p, cfg.bounds);
        std::printf("  mu=%s eps=%s delta=%s gamma=%s bo_inv=%s  nu_margin=%s\n", fmt(p.mu).c_str(),
                    fmt(p.eps).c_str(), fmt(p.delta).c_str(), fmt(p.gamma).c_str(),
                    fmt(p.bo_inv).c_str(), fmt(rep.nu_margin).c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solver suite for a fully nonlinear one-dimensional internal-wave model"};
    app.require_subcommand(1);

    std::string run_path, validate_path;
    CLI::App* run = app.add_subcommand("run", "run one experiment from a config file");
    run->add_option("config", run_path, "path to a key=value config file")->required();
    CLI::App* list = app.add_subcommand("list-experiments", "list the available experiments");
    CLI::App* validate = app.add_subcommand("validate", "parse and validate a config file");
    validate->add_option("config", validate_path, "path to a key=value config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) return cmd_run(run_path);
        if (list->parsed()) return cmd_list();
        if (validate->parsed()) return cmd_validate(validate_path);
    } catch (const gnch::Error& e) {
        std::fprintf(stderr, "error [%s]: %s\n", gnch::to_string(e.code()), e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
