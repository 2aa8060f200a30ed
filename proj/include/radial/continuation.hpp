#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radial/classification.hpp"
#include "radial/shooting.hpp"

namespace radial {

struct BranchPoint {
    double lambda = 0.0;
    double s = 0.0;
    std::string class_label;
    int k = 0;
    double u_max = 0.0;
    double u_min = 0.0;
    double boundary_miss = 0.0;
    bool resolution_limited = false;
};

enum class BranchStatus { Alive, Terminated, Merged };
std::string to_string(BranchStatus status);

struct Branch {
    int id = 0;
    std::vector<BranchPoint> points;
    BranchStatus status = BranchStatus::Alive;
    std::optional<double> lambda_before_birth;  // sweep point preceding the first point
    std::optional<double> lambda_lost;          // first sweep point where no continuation was found
};

struct SweepSettings {
    ShootingSettings shooting;
    ClassifySettings classify;
    int coarse_scan = 400;        // intervals of the global scan at every point
    int warm_scan = 100;          // intervals of each warm-start window
    double warm_rel_width = 0.05; // half-width relative to 1 + |s|
    double jump_rel = 0.5;        // branch-jump guard: jump_rel * |s| + jump_abs
    double jump_abs = 1.0;
    bool warm_start = true;
};

struct SweepResult {
    std::vector<double> lambdas;
    std::vector<Branch> branches;
    std::vector<SolutionSet> sets;  // one per sweep point
};

/// Geometric grid with `steps` points from lo to hi (a single point when lo == hi).
std::vector<double> geometric_grid(double lo, double hi, int steps);

SweepResult sweep(const RadialProblem& problem, double lambda_lo, double lambda_hi, int steps,
                  const SweepSettings& settings = {});

std::vector<Branch> sweep_lambda(const RadialProblem& problem, double lambda_lo, double lambda_hi, int steps,
                                 const SweepSettings& settings = {});

enum class TransitionKind { ClassChange, Birth, Termination };
std::string to_string(TransitionKind kind);

struct Transition {
    double lambda_lo = 0.0;
    double lambda_hi = 0.0;
    int branch = 0;
    TransitionKind kind = TransitionKind::ClassChange;
    std::string description;
};

std::vector<Transition> detect_transitions(const std::vector<Branch>& branches);

}  // namespace radial
