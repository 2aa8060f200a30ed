#pragma once

#include <cstddef>
#include <vector>

#include "radial/problem.hpp"

namespace radial {

struct IntegratorSettings {
    double atol = 1e-10;
    double rtol = 1e-10;
    double t_start = 1e-6;          // Taylor start point away from the singular origin
    double overflow_guard = 1e12;   // |u| beyond this is reported as blow-up
    double max_step = 1.0 / 256.0;  // also guarantees at least 256 nodes
    double min_step = 1e-15;
    std::size_t max_steps = 2'000'000;
};

struct IntegrationStats {
    std::size_t steps = 0;
    std::size_t rejected = 0;
    std::size_t rhs_evaluations = 0;
    double atol = 0.0;
    double rtol = 0.0;
    double t_start = 0.0;
};

/// A trajectory (t, u, u') on [0, 1] with dense output.
///
/// Between nodes u is the quintic Hermite interpolant of (u, u', u''); it is
/// C^2, so second differences of the dense output stay at integrator accuracy.
class SolutionProfile {
public:
    SolutionProfile(RadialProblem problem, double s0, std::vector<double> grid, std::vector<double> u,
                    std::vector<double> du, std::vector<double> ddu, IntegrationStats stats = {});

    /// Build a profile from sampled data. Missing u'' is estimated by
    /// three-point differences of u'.
    static SolutionProfile from_samples(RadialProblem problem, std::vector<double> grid, std::vector<double> u,
                                        std::vector<double> du, std::vector<double> ddu = {});

    const RadialProblem& problem() const { return problem_; }
    double s0() const { return s0_; }
    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& u() const { return u_; }
    const std::vector<double>& du() const { return du_; }
    const std::vector<double>& ddu() const { return ddu_; }
    const IntegrationStats& stats() const { return stats_; }
    std::size_t size() const { return grid_.size(); }
    double terminal() const { return u_.back(); }

    double value(double t) const;
    double slope(double t) const;

private:
    std::size_t interval(double t) const;

    RadialProblem problem_;
    double s0_;
    std::vector<double> grid_;
    std::vector<double> u_;
    std::vector<double> du_;
    std::vector<double> ddu_;
    IntegrationStats stats_;
};

/// u'' from the radial equation. At t = 0 the removable limit
/// -(g(u) - lambda - f(0)) / n is used.
double rhs(double t, double u, double du, const RadialProblem& problem);

enum class IvpStatus { Completed, BlowUp, StepFailure };

struct IvpResult {
    IvpStatus status = IvpStatus::Completed;
    int blowup_sign = 0;
    double t_stop = 1.0;
    std::vector<double> grid, u, du, ddu;
    IntegrationStats stats;
};

/// Integrates from u(0) = s0, u'(0) = 0 up to t = 1 or until the trajectory
/// escapes. Never throws for blow-up or step failure.
IvpResult shoot(double s0, const RadialProblem& problem, const IntegratorSettings& settings = {});

/// As shoot, but returns a profile and throws BlowUpError / StepFailureError.
SolutionProfile integrate(double s0, const RadialProblem& problem, const IntegratorSettings& settings = {});

/// Max interior residual of the radial equation on a uniform 4096-point grid,
/// with u'' from centered second differences of the dense output, scaled by
/// 1 / (1 + lambda).
double residual_norm(const SolutionProfile& profile);

}  // namespace radial
