#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "tanaka/config.hpp"
#include "tanaka/driver.hpp"

namespace {

struct SubOpts {
    std::string config;
    std::string out_dir = ".";
    long structure = 0;
    long bound = 0;
    long max_degree = 0;
    CLI::Option* structure_opt = nullptr;
    CLI::Option* bound_opt = nullptr;
    CLI::Option* max_degree_opt = nullptr;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded CR admissibility and Tanaka prolongation in exact arithmetic"};
    app.require_subcommand(1);

    const std::map<std::string, std::string> descriptions = {
        {"check", "decide which admissible structures each configured module admits"},
        {"classify", "scan dominant weights up to a bound for admissible modules"},
        {"prolong", "build the full prolongation of the chosen graded extension"},
        {"render", "draw the weight diagram (SVG for rank <= 2, text otherwise)"},
    };
    std::map<std::string, SubOpts> opts;
    for (const auto& [name, desc] : descriptions) {
        CLI::App* sub = app.add_subcommand(name, desc);
        SubOpts& so = opts[name];
        sub->add_option("--config", so.config, "job file (JSON, schema 1)")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--out", so.out_dir, "directory for report files")
            ->default_val(".");
        if (name == "prolong") {
            so.structure_opt = sub->add_option(
                "--structure", so.structure,
                "index into the admissible structures of a single module");
            so.max_degree_opt =
                sub->add_option("--max-degree", so.max_degree, "prolongation degree cap");
        }
        if (name == "classify")
            so.bound_opt =
                sub->add_option("--bound", so.bound, "dominant weight coordinate sum bound");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    for (auto& [name, so] : opts) {
        if (!app.get_subcommand(name)->parsed()) continue;
        try {
            const tanaka::JobConfig cfg = tanaka::load_config(so.config);
            if (cfg.command != name) {
                std::cerr << "error: config command \"" << cfg.command
                          << "\" does not match subcommand \"" << name << "\"\n";
                return 1;
            }
            tanaka::DriverOptions dopt;
            dopt.out_dir = so.out_dir;
            if (so.structure_opt && so.structure_opt->count()) dopt.structure_index = so.structure;
            if (so.bound_opt && so.bound_opt->count()) dopt.bound = so.bound;
            if (so.max_degree_opt && so.max_degree_opt->count()) dopt.max_degree = so.max_degree;
            return tanaka::run_job(cfg, dopt, std::cout, std::cerr);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
    }
    return 1;
}
