#include "radial/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace radial {

std::string to_string(BranchStatus status) {
    switch (status) {
        case BranchStatus::Alive: return "alive";
        case BranchStatus::Terminated: return "terminated";
        case BranchStatus::Merged: return "merged";
    }
    return "unknown";
}

std::string to_string(TransitionKind kind) {
    switch (kind) {
        case TransitionKind::ClassChange: return "class change";
        case TransitionKind::Birth: return "branch birth";
        case TransitionKind::Termination: return "branch termination";
    }
    return "unknown";
}

std::vector<double> geometric_grid(double lo, double hi, int steps) {
    if (!(lo > 0.0) || hi < lo) throw std::invalid_argument("geometric_grid: need 0 < lo <= hi");
    if (steps < 1) throw std::invalid_argument("geometric_grid: need at least one step");
    if (lo == hi || steps == 1) return {lo};
    std::vector<double> out(steps);
    const double ratio = std::log(hi / lo);
    for (int i = 0; i < steps; ++i) out[i] = lo * std::exp(ratio * i / (steps - 1));
    out.back() = hi;
    return out;
}

namespace {

BranchPoint make_point(const Solution& sol, const ClassificationReport& rep) {
    BranchPoint p;
    p.lambda = sol.profile.problem().lambda();
    p.s = sol.s();
    p.class_label = rep.class_label;
    p.k = rep.k;
    const auto& u = sol.profile.u();
    p.u_max = *std::max_element(u.begin(), u.end());
    p.u_min = *std::min_element(u.begin(), u.end());
    p.boundary_miss = sol.boundary_miss();
    p.resolution_limited = sol.resolution_limited;
    return p;
}

// Linear predictor in log(lambda) from the last two points.
double predict(const Branch& b, double lambda) {
    const auto& pts = b.points;
    if (pts.size() < 2) return pts.back().s;
    const auto& p1 = pts[pts.size() - 2];
    const auto& p2 = pts.back();
    const double x1 = std::log(p1.lambda), x2 = std::log(p2.lambda), x = std::log(lambda);
    return p2.s + (p2.s - p1.s) * (x - x2) / (x2 - x1);
}

}  // namespace

SweepResult sweep(const RadialProblem& problem, double lambda_lo, double lambda_hi, int steps,
                  const SweepSettings& settings) {
    SweepResult result;
    result.lambdas = geometric_grid(lambda_lo, lambda_hi, std::max(steps, 1));
    auto& branches = result.branches;
    int next_id = 0;

    for (std::size_t i = 0; i < result.lambdas.size(); ++i) {
        const double lam = result.lambdas[i];
        const auto pb = problem.with_lambda(lam);
        const auto window = default_scan_window(pb);

        std::vector<std::pair<Bracket, int>> windows{{window, settings.coarse_scan}};
        std::vector<double> predictions(branches.size(), std::numeric_limits<double>::quiet_NaN());
        for (std::size_t b = 0; b < branches.size(); ++b) {
            if (branches[b].status != BranchStatus::Alive) continue;
            predictions[b] = predict(branches[b], lam);
            if (!settings.warm_start) continue;
            const double half = settings.warm_rel_width * (1.0 + std::abs(predictions[b]));
            const double lo = std::max(window.lo, predictions[b] - half);
            const double hi = std::min(window.hi, predictions[b] + half);
            if (lo < hi) windows.push_back({{lo, hi}, settings.warm_scan});
        }
        auto set = solve_windows(pb, windows, settings.shooting);

        std::vector<BranchPoint> points;
        for (const auto& sol : set.solutions) points.push_back(make_point(sol, classify(sol.profile, settings.classify)));

        // Greedy nearest-s matching under the jump guard; a solution of the
        // branch's own class beats a closer one of another class.
        struct Candidate {
            bool other_class;
            double distance;
            std::size_t branch;
            std::size_t solution;
        };
        std::vector<Candidate> candidates;
        for (std::size_t b = 0; b < branches.size(); ++b) {
            if (branches[b].status != BranchStatus::Alive) continue;
            const auto& last = branches[b].points.back();
            const double guard = settings.jump_rel * std::abs(last.s) + settings.jump_abs;
            for (std::size_t j = 0; j < points.size(); ++j) {
                if (std::abs(points[j].s - last.s) >= guard) continue;
                candidates.push_back({points[j].class_label != last.class_label,
                                      std::abs(points[j].s - predictions[b]), b, j});
            }
        }
        std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
            return std::tie(x.other_class, x.distance) < std::tie(y.other_class, y.distance);
        });
        std::vector<bool> branch_done(branches.size(), false), solution_used(points.size(), false);
        std::vector<bool> had_candidate(branches.size(), false);
        for (const auto& c : candidates) {
            had_candidate[c.branch] = true;
            if (branch_done[c.branch] || solution_used[c.solution]) continue;
            branches[c.branch].points.push_back(points[c.solution]);
            branch_done[c.branch] = solution_used[c.solution] = true;
        }
        for (std::size_t b = 0; b < branches.size(); ++b) {
            if (branches[b].status != BranchStatus::Alive || branch_done[b]) continue;
            branches[b].status = had_candidate[b] ? BranchStatus::Merged : BranchStatus::Terminated;
            branches[b].lambda_lost = lam;
        }
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (solution_used[j]) continue;
            Branch nb;
            nb.id = next_id++;
            if (i > 0) nb.lambda_before_birth = result.lambdas[i - 1];
            nb.points.push_back(points[j]);
            branches.push_back(std::move(nb));
        }
        result.sets.push_back(std::move(set));
    }
    return result;
}

std::vector<Branch> sweep_lambda(const RadialProblem& problem, double lambda_lo, double lambda_hi, int steps,
                                 const SweepSettings& settings) {
    return sweep(problem, lambda_lo, lambda_hi, steps, settings).branches;
}

std::vector<Transition> detect_transitions(const std::vector<Branch>& branches) {
    std::vector<Transition> out;
    for (const auto& b : branches) {
        if (b.points.empty()) continue;
        if (b.lambda_before_birth) {
            out.push_back({*b.lambda_before_birth, b.points.front().lambda, b.id, TransitionKind::Birth,
                           "branch " + std::to_string(b.id) + " appears in class " + b.points.front().class_label});
        }
        for (std::size_t i = 1; i < b.points.size(); ++i) {
            const auto& p0 = b.points[i - 1];
            const auto& p1 = b.points[i];
            if (p0.class_label != p1.class_label)
                out.push_back({p0.lambda, p1.lambda, b.id, TransitionKind::ClassChange,
                               "branch " + std::to_string(b.id) + ": " + p0.class_label + " -> " + p1.class_label});
        }
        if (b.lambda_lost) {
            out.push_back({b.points.back().lambda, *b.lambda_lost, b.id, TransitionKind::Termination,
                           "branch " + std::to_string(b.id) + " " + to_string(b.status)});
        }
    }
    std::sort(out.begin(), out.end(), [](const Transition& a, const Transition& b) {
        return a.lambda_lo < b.lambda_lo || (a.lambda_lo == b.lambda_lo && a.branch < b.branch);
    });
    return out;
}

}  // namespace radial
