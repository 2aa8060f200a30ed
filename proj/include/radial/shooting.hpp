#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "radial/radial_ivp.hpp"

namespace radial {

enum class OutcomeKind { Finite, BlowUp, Failed };

/// u(1; s), or the signed blow-up marker when the trajectory escapes.
struct ShootingOutcome {
    double s = 0.0;
    OutcomeKind kind = OutcomeKind::Finite;
    double terminal = 0.0;  // u(1) when finite
    int blowup_sign = 0;

    /// Value used for bracketing: u(1) or +/-inf.
    double signed_value() const;
    bool usable() const { return kind != OutcomeKind::Failed; }
};

ShootingOutcome boundary_miss(double s, const RadialProblem& problem, const IntegratorSettings& settings = {});

struct ShootingSettings {
    IntegratorSettings integrator;
    double boundary_tol = 1e-9;    // target |u(1)| for refined solutions
    double bracket_tol = 0.0;      // extra stop on bracket width; 0 bisects to machine resolution
    double resolution_tol = 1e-2;  // largest |u(1)| accepted once the bracket has collapsed to adjacent doubles
    double merge_tol = 1e-8;
    double admissible_tol = 1e-9;
    unsigned threads = 1;
};

struct Bracket {
    double lo;
    double hi;
};

struct Solution {
    SolutionProfile profile;
    Bracket bracket;
    std::size_t bisection_steps = 0;
    /// |u(1)| could not be pushed below boundary_tol before the bracket
    /// collapsed to adjacent doubles (exponentially sensitive shooting map).
    bool resolution_limited = false;

    double s() const { return profile.s0(); }
    double boundary_miss() const { return profile.terminal(); }
};

struct SolutionSet {
    std::vector<Solution> solutions;  // sorted by s
    std::vector<Bracket> brackets;    // every sign change of the scan
    std::vector<ShootingOutcome> scan;
    double s_lo = 0.0;
    double s_hi = 0.0;
    int n_scan = 0;
    std::size_t inadmissible = 0;  // refined roots rejected by filter_admissible
    std::size_t unresolved = 0;    // brackets without a usable root (jump or blow-up boundary)
};

/// u'(0) = 0 and u''(0) >= 0 up to tolerance, i.e. g(u(0)) <= lambda + f(0) + n * tol.
bool filter_admissible(const SolutionProfile& profile, double tol = 1e-9);
bool admissible_start(double s, const RadialProblem& problem, double tol = 1e-9);

/// g-^{-1}(lambda + f(0)): the most negative admissible start, when defined.
std::optional<double> admissibility_boundary(const RadialProblem& problem);

/// [-2 R(4(lambda + M)), g+^{-1}(lambda + f(0))], with the lower end raised to
/// just below the admissibility boundary.
Bracket default_scan_window(const RadialProblem& problem);

/// Uniform grid of n_scan intervals, plus log-spaced points just above the
/// admissibility boundary when it lies inside the window.
std::vector<double> scan_points(const RadialProblem& problem, double s_lo, double s_hi, int n_scan);

/// Scans boundary_miss on n_scan uniform intervals of [s_lo, s_hi] and
/// refines every sign change by bisection.
SolutionSet solve_all(const RadialProblem& problem, double s_lo, double s_hi, int n_scan,
                      const ShootingSettings& settings = {});
SolutionSet solve_all(const RadialProblem& problem, int n_scan = 2000, const ShootingSettings& settings = {});

/// Several scan windows, solutions merged when |s_i - s_j| <= merge_tol.
SolutionSet solve_windows(const RadialProblem& problem, const std::vector<std::pair<Bracket, int>>& windows,
                          const ShootingSettings& settings = {});

}  // namespace radial
