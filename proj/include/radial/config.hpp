#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radial/continuation.hpp"
#include "radial/estimates.hpp"
#include "radial/serialization.hpp"

namespace radial {

/// Fully validated run configuration. Every field carries its default.
struct RunConfig {
    struct NonlinearityBlock {
        std::string kind = "power";
        double p = 2.0;
        double q = 5.0;
        double A = 1.0;
    } nonlinearity;

    struct SourceBlock {
        std::string kind = "zero";
        std::vector<double> coefficients;
    } source;

    struct ProblemBlock {
        int n = 1;
        double lambda = 100.0;
        double lambda_lo = 50.0;
        double lambda_hi = 400.0;
        int steps = 16;
    } problem;

    struct SolverBlock {
        double atol = 1e-10;
        double rtol = 1e-10;
        double t_start = 1e-6;
        double overflow_guard = 1e12;
        double max_step = 1.0 / 256.0;
        int n_scan = 2000;
        std::optional<double> s_lo;
        std::optional<double> s_hi;
        double boundary_tol = 1e-9;
        int sweep_scan = 400;
        int warm_scan = 100;
        int threads = 1;
    } solver;

    struct BoundsBlock {
        std::optional<double> B;
        std::optional<double> delta;
        double m1 = 0.0;
        double m2 = 1.0;
        double a = 1.0;
        double b = 4.0;
        double lambda_min = 50.0;
    } bounds;

    struct OutputBlock {
        std::string directory = "out";
        std::vector<std::string> formats{"json", "csv"};
    } output;

    Nonlinearity make_nonlinearity() const;
    SourceTerm make_source() const;
    RadialProblem make_problem() const;
    RadialProblem make_problem(double lambda) const;
    ShootingSettings shooting_settings() const;
    SweepSettings sweep_settings() const;
    BoundsSettings bounds_settings() const;
    bool wants(const std::string& format) const;

    /// Effective configuration, echoed into run manifests.
    Json to_json() const;
};

/// Parses the sectioned key = value format:
///
///   # comment
///   [problem]
///   n = 1
///   lambda = 100
///   [source]
///   kind = cosine
///   coefficients = [0, 0.5]
///
/// Throws ConfigError naming the line and field path on syntax errors,
/// unknown keys and failed validation.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Known keys per section, in the order they are documented.
std::vector<std::pair<std::string, std::vector<std::string>>> config_schema();

}  // namespace radial
