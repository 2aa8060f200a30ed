#include "radial/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "radial/errors.hpp"

namespace radial {

namespace fs = std::filesystem;

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"check-nonlinearity", "solve", "classify", "verify-bounds", "sweep"};
    return names;
}

namespace {

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
}

void write_json(const fs::path& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

std::string tag(double lambda, std::size_t index) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "lambda%g_%zu", lambda, index);
    return buf;
}

struct Context {
    const RunConfig& config;
    const CommandOptions& options;
    fs::path dir;
    std::ostream& log;
};

// Solutions to work on: either the stored profile or everything solve_all finds.
std::vector<SolutionProfile> gather_profiles(const Context& ctx) {
    const auto problem = ctx.config.make_problem();
    if (ctx.options.profile) {
        std::ifstream in(*ctx.options.profile);
        if (!in) throw std::runtime_error("cannot open profile '" + ctx.options.profile->string() + "'");
        return {read_profile_csv(in, problem)};
    }
    const auto& s = ctx.config.solver;
    const auto set = s.s_lo ? solve_all(problem, *s.s_lo, *s.s_hi, s.n_scan, ctx.config.shooting_settings())
                            : solve_all(problem, s.n_scan, ctx.config.shooting_settings());
    std::vector<SolutionProfile> out;
    for (const auto& sol : set.solutions) out.push_back(sol.profile);
    return out;
}

int check_nonlinearity(const Context& ctx) {
    const auto report = verify_conditions(ctx.config.make_nonlinearity());
    write_json(ctx.dir / "conditions.json", to_json(report));
    ctx.log << "superlinear(+): " << report.superlinear_pos << "  superlinear(-): " << report.superlinear_neg
            << "  ratio: " << report.ratio_condition << "  shape: " << report.shape_ok
            << "  verdict: " << (report.verdict ? "true" : "false") << '\n';
    return ctx.options.strict && !report.verdict ? kExitCheckFailed : kExitOk;
}

int solve(const Context& ctx) {
    const auto problem = ctx.config.make_problem();
    const auto& s = ctx.config.solver;
    const auto set = s.s_lo ? solve_all(problem, *s.s_lo, *s.s_hi, s.n_scan, ctx.config.shooting_settings())
                            : solve_all(problem, s.n_scan, ctx.config.shooting_settings());
    if (ctx.config.wants("json")) {
        Json j = to_json(set);
        j["problem"] = to_json(problem);
        write_json(ctx.dir / "solutions.json", j);
    }
    for (std::size_t i = 0; i < set.solutions.size(); ++i) {
        const auto& sol = set.solutions[i];
        const auto name = "profile_" + tag(problem.lambda(), i);
        if (ctx.config.wants("csv")) {
            std::ofstream out(ctx.dir / (name + ".csv"), std::ios::binary);
            write_profile_csv(out, sol.profile);
        }
        if (ctx.config.wants("json")) write_json(ctx.dir / (name + ".json"), to_json(sol.profile));
        ctx.log << "solution " << i << ": s = " << format_double(sol.s())
                << "  u(1) = " << format_double(sol.boundary_miss())
                << (sol.resolution_limited ? "  (resolution limited)" : "") << '\n';
    }
    ctx.log << set.solutions.size() << " solution(s), " << set.brackets.size() << " bracket(s)\n";
    return kExitOk;
}

int classify_cmd(const Context& ctx) {
    const auto profiles = gather_profiles(ctx);
    Json reports = Json::array();
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        const auto rep = classify(profiles[i]);
        reports.push_back(to_json(rep));
        if (ctx.config.wants("csv")) {
            const auto t = tag(rep.lambda, i);
            std::ofstream zeros(ctx.dir / ("zeros_" + t + ".csv"), std::ios::binary);
            write_zeros_csv(zeros, rep);
            std::ofstream crit(ctx.dir / ("critical_points_" + t + ".csv"), std::ios::binary);
            write_critical_points_csv(crit, rep);
        }
        ctx.log << "profile " << i << ": class " << rep.class_label << " (k = " << rep.k << ")\n";
    }
    if (ctx.config.wants("json")) write_json(ctx.dir / "classification.json", reports);
    return kExitOk;
}

int verify_bounds_cmd(const Context& ctx) {
    const auto profiles = gather_profiles(ctx);
    Json reports = Json::array();
    std::string table;
    bool failed = false;
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        const auto rep = classify(profiles[i]);
        const auto bounds = verify_bounds(profiles[i], rep, ctx.config.bounds_settings());
        Json j = to_json(bounds);
        j["class"] = rep.class_label;
        j["below_lambda_min"] = bounds.lambda < ctx.config.bounds.lambda_min;
        reports.push_back(std::move(j));
        table += "# profile " + std::to_string(i) + " (" + rep.class_label + ")\n" + bounds_table(bounds);
        if (!bounds.all_pass() && bounds.lambda >= ctx.config.bounds.lambda_min) failed = true;
    }
    if (ctx.config.wants("json")) write_json(ctx.dir / "bounds.json", reports);
    write_text(ctx.dir / "bounds.txt", table);
    ctx.log << table;
    return ctx.options.strict && failed ? kExitCheckFailed : kExitOk;
}

int sweep_cmd(const Context& ctx) {
    const auto& pb = ctx.config.problem;
    const auto result = sweep(ctx.config.make_problem(pb.lambda_lo), pb.lambda_lo, pb.lambda_hi, pb.steps,
                              ctx.config.sweep_settings());
    const auto transitions = detect_transitions(result.branches);
    if (ctx.config.wants("csv")) {
        std::ofstream out(ctx.dir / "branches.csv", std::ios::binary);
        write_branches_csv(out, result.branches);
    }
    if (ctx.config.wants("json")) {
        write_json(ctx.dir / "branches.json", to_json(result.branches));
        write_json(ctx.dir / "transitions.json", to_json(transitions));
    }
    bool class_change = false;
    for (const auto& t : transitions) {
        ctx.log << "(" << format_double(t.lambda_lo) << ", " << format_double(t.lambda_hi) << "): " << t.description
                << '\n';
        if (t.kind == TransitionKind::ClassChange && t.lambda_lo >= ctx.config.bounds.lambda_min) class_change = true;
    }
    ctx.log << result.branches.size() << " branch(es), " << transitions.size() << " transition(s)\n";
    return ctx.options.strict && class_change ? kExitCheckFailed : kExitOk;
}

}  // namespace

int run_command(const std::string& command, const RunConfig& config, const CommandOptions& options,
                std::ostream& log) {
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), command) == names.end()) {
        log << "error: unknown command '" << command << "'\n";
        return kExitError;
    }
    try {
        const fs::path dir = options.out_dir.empty() ? fs::path(config.output.directory) : options.out_dir;
        fs::create_directories(dir);
        Json manifest{{"command", command}, {"strict", options.strict}, {"config", config.to_json()}};
        if (options.profile) manifest["profile"] = options.profile->string();
        write_json(dir / "manifest.json", manifest);

        const Context ctx{config, options, dir, log};
        if (command == "check-nonlinearity") return check_nonlinearity(ctx);
        if (command == "solve") return solve(ctx);
        if (command == "classify") return classify_cmd(ctx);
        if (command == "verify-bounds") return verify_bounds_cmd(ctx);
        return sweep_cmd(ctx);
    } catch (const DomainError& e) {
        log << "error (branch inverse domain): " << e.what() << '\n';
    } catch (const BlowUpError& e) {
        log << "error (trajectory blow-up): " << e.what() << '\n';
    } catch (const StepFailureError& e) {
        log << "error (integrator step failure): " << e.what() << '\n';
    } catch (const std::exception& e) {
        log << "error: " << e.what() << '\n';
    }
    return kExitError;
}

}  // namespace radial
