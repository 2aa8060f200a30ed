// Command-line front end: radialctl <command> --config <path> [--out <dir>] [--strict] [--profile <csv>]

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "radial/commands.hpp"
#include "radial/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Shooting solver and estimate verifier for radial nonpositone problems"};
    app.require_subcommand(1, 1);

    std::string config_path;
    std::string out_dir;
    std::string profile;
    bool strict = false;

    const std::map<std::string, std::string> blurbs = {
        {"check-nonlinearity", "check the structural conditions on g"},
        {"solve", "find all admissible shooting solutions"},
        {"classify", "count zeros of phi and label each solution"},
        {"verify-bounds", "evaluate the a priori estimates on each solution"},
        {"sweep", "continue solution branches over a lambda range"},
    };
    for (const auto& name : radial::command_names()) {
        auto it = blurbs.find(name);
        auto* sub = app.add_subcommand(name, it == blurbs.end() ? "" : it->second);
        sub->add_option("--config", config_path, "configuration file")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", out_dir, "output directory (overrides output.directory)");
        sub->add_flag("--strict", strict, "exit with status 1 when a check fails");
        if (name == "classify" || name == "verify-bounds")
            sub->add_option("--profile", profile, "profile CSV (t,u,du) to use instead of solving");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : radial::kExitError;
    }

    radial::RunConfig config;
    try {
        config = radial::load_config(config_path);
    } catch (const radial::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return radial::kExitError;
    }

    radial::CommandOptions options;
    options.out_dir = out_dir;
    options.strict = strict;
    if (!profile.empty()) options.profile = profile;
    return radial::run_command(app.get_subcommands().front()->get_name(), config, options, std::cout);
}
