#include "radial/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>

#include "radial/errors.hpp"
#include "radial/roots.hpp"

namespace radial {

double ShootingOutcome::signed_value() const {
    switch (kind) {
        case OutcomeKind::Finite: return terminal;
        case OutcomeKind::BlowUp: return blowup_sign * std::numeric_limits<double>::infinity();
        case OutcomeKind::Failed: return std::numeric_limits<double>::quiet_NaN();
    }
    return std::numeric_limits<double>::quiet_NaN();
}

ShootingOutcome boundary_miss(double s, const RadialProblem& problem, const IntegratorSettings& settings) {
    const auto r = shoot(s, problem, settings);
    ShootingOutcome out;
    out.s = s;
    switch (r.status) {
        case IvpStatus::Completed:
            out.terminal = r.u.back();
            break;
        case IvpStatus::BlowUp:
            out.kind = OutcomeKind::BlowUp;
            out.blowup_sign = r.blowup_sign;
            break;
        case IvpStatus::StepFailure:
            throw StepFailureError("boundary_miss: step size underflow");
    }
    return out;
}

bool admissible_start(double s, const RadialProblem& problem, double tol) {
    const double limit = problem.lambda() + problem.source().value(0.0) + problem.dimension() * tol;
    return problem.nonlinearity().value(s) <= limit;
}

bool filter_admissible(const SolutionProfile& profile, double tol) {
    if (profile.du().front() != 0.0) return false;
    return admissible_start(profile.u().front(), profile.problem(), tol);
}

std::optional<double> admissibility_boundary(const RadialProblem& problem) {
    try {
        return problem.nonlinearity().inverse_minus(problem.lambda() + problem.source().value(0.0));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

Bracket default_scan_window(const RadialProblem& problem) {
    const auto& nl = problem.nonlinearity();
    const double lam = problem.lambda();
    const double m = problem.source_norm();
    Bracket w{-2.0 * nl.envelope(4.0 * (lam + m)), nl.inverse_plus(lam + problem.source().value(0.0))};
    // Starts below the admissibility boundary are rejected anyway; keep a short blow-up stretch for bracketing.
    if (const auto adm = admissibility_boundary(problem)) w.lo = std::max(w.lo, *adm - 0.05 * (1.0 + std::abs(*adm)));
    return w;
}

std::vector<double> scan_points(const RadialProblem& problem, double s_lo, double s_hi, int n_scan) {
    std::vector<double> pts(static_cast<std::size_t>(n_scan) + 1);
    for (int i = 0; i <= n_scan; ++i) pts[i] = s_lo + (s_hi - s_lo) * static_cast<double>(i) / n_scan;
    pts.back() = s_hi;
    const auto adm = admissibility_boundary(problem);
    if (adm && s_lo < *adm && *adm < s_hi) {
        // u(1; s) varies on a logarithmic scale in s - s_adm near the saddle at the boundary.
        const double cell = (s_hi - s_lo) / n_scan;
        const double scale = 1.0 + std::abs(*adm);
        const double lo_dec = std::log10(4.0 * std::numeric_limits<double>::epsilon() * scale);
        const double hi_dec = std::log10(cell);
        for (double d = lo_dec; d < hi_dec; d += 1.0 / 16.0) {
            const double s = *adm + std::pow(10.0, d);
            if (s > *adm && s < s_hi) pts.push_back(s);
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

namespace {

ShootingOutcome safe_miss(double s, const RadialProblem& problem, const IntegratorSettings& cfg) {
    try {
        return boundary_miss(s, problem, cfg);
    } catch (const StepFailureError&) {
        ShootingOutcome o;
        o.s = s;
        o.kind = OutcomeKind::Failed;
        return o;
    }
}

std::vector<ShootingOutcome> scan_grid(const RadialProblem& problem, const std::vector<double>& points,
                                       const ShootingSettings& settings) {
    std::vector<ShootingOutcome> out(points.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) out[i] = safe_miss(points[i], problem, settings.integrator);
    };
    const unsigned threads = std::max(1u, settings.threads);
    if (threads == 1) {
        work(0, out.size());
        return out;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (out.size() + threads - 1) / threads;
    for (std::size_t b = 0; b < out.size(); b += chunk) pool.emplace_back(work, b, std::min(out.size(), b + chunk));
    for (auto& t : pool) t.join();
    return out;
}

std::optional<Solution> refine(const RadialProblem& problem, const ShootingOutcome& left,
                               const ShootingOutcome& right, const ShootingSettings& settings) {
    // Bracketing on a clamped surrogate keeps the blow-up markers' sign.
    auto value = [&](double s) {
        const auto o = safe_miss(s, problem, settings.integrator);
        if (o.kind == OutcomeKind::Failed) return std::numeric_limits<double>::quiet_NaN();
        if (o.kind == OutcomeKind::BlowUp) return o.blowup_sign * std::numeric_limits<double>::max();
        return o.terminal;
    };
    auto clamp = [](double v) {
        return std::isinf(v) ? std::copysign(std::numeric_limits<double>::max(), v) : v;
    };
    const auto r = bisect(value, left.s, right.s, clamp(left.signed_value()), clamp(right.signed_value()),
                          settings.boundary_tol, settings.bracket_tol);
    if (!std::isfinite(r.value) || std::abs(r.value) == std::numeric_limits<double>::max()) return std::nullopt;
    const bool converged = std::abs(r.value) <= settings.boundary_tol;
    if (!converged) {
        const bool collapsed = std::nextafter(r.lo, r.hi) >= r.hi;
        if (!collapsed || std::abs(r.value) > settings.resolution_tol) return std::nullopt;
    }

    auto r_ivp = shoot(r.root, problem, settings.integrator);
    if (r_ivp.status != IvpStatus::Completed) return std::nullopt;
    SolutionProfile profile(problem, r.root, std::move(r_ivp.grid), std::move(r_ivp.u), std::move(r_ivp.du),
                            std::move(r_ivp.ddu), r_ivp.stats);
    return Solution{std::move(profile), {r.lo, r.hi}, r.iterations, !converged};
}

bool sign_change(const ShootingOutcome& a, const ShootingOutcome& b) {
    if (!a.usable() || !b.usable()) return false;
    const double va = a.signed_value(), vb = b.signed_value();
    if (va == 0.0 || vb == 0.0) return va == 0.0;  // exact root at the left node is captured once
    return (va < 0.0) != (vb < 0.0);
}

void scan_window(const RadialProblem& problem, Bracket window, int n_scan, const ShootingSettings& settings,
                 SolutionSet& set) {
    if (!(window.lo < window.hi)) throw std::invalid_argument("solve_all: need s_lo < s_hi");
    if (n_scan < 1) throw std::invalid_argument("solve_all: n_scan must be positive");
    auto scan = scan_grid(problem, scan_points(problem, window.lo, window.hi, n_scan), settings);
    for (std::size_t i = 0; i + 1 < scan.size(); ++i) {
        if (!sign_change(scan[i], scan[i + 1])) continue;
        set.brackets.push_back({scan[i].s, scan[i + 1].s});
        auto sol = refine(problem, scan[i], scan[i + 1], settings);
        if (!sol) {
            ++set.unresolved;
            continue;
        }
        if (!filter_admissible(sol->profile, settings.admissible_tol)) {
            ++set.inadmissible;
            continue;
        }
        set.solutions.push_back(std::move(*sol));
    }
    set.scan.insert(set.scan.end(), scan.begin(), scan.end());
}

void finalize(SolutionSet& set, double merge_tol) {
    std::sort(set.solutions.begin(), set.solutions.end(), [](const Solution& a, const Solution& b) {
        return a.s() < b.s();
    });
    std::vector<Solution> merged;
    for (auto& s : set.solutions) {
        if (!merged.empty() && std::abs(s.s() - merged.back().s()) <= merge_tol) {
            if (std::abs(s.boundary_miss()) < std::abs(merged.back().boundary_miss())) merged.back() = std::move(s);
            continue;
        }
        merged.push_back(std::move(s));
    }
    set.solutions = std::move(merged);
    std::sort(set.brackets.begin(), set.brackets.end(), [](const Bracket& a, const Bracket& b) { return a.lo < b.lo; });
    std::sort(set.scan.begin(), set.scan.end(), [](const ShootingOutcome& a, const ShootingOutcome& b) {
        return a.s < b.s;
    });
}

}  // namespace

SolutionSet solve_all(const RadialProblem& problem, double s_lo, double s_hi, int n_scan,
                      const ShootingSettings& settings) {
    SolutionSet set;
    set.s_lo = s_lo;
    set.s_hi = s_hi;
    set.n_scan = n_scan;
    scan_window(problem, {s_lo, s_hi}, n_scan, settings, set);
    finalize(set, settings.merge_tol);
    return set;
}

SolutionSet solve_all(const RadialProblem& problem, int n_scan, const ShootingSettings& settings) {
    const auto w = default_scan_window(problem);
    return solve_all(problem, w.lo, w.hi, n_scan, settings);
}

SolutionSet solve_windows(const RadialProblem& problem, const std::vector<std::pair<Bracket, int>>& windows,
                          const ShootingSettings& settings) {
    SolutionSet set;
    if (windows.empty()) return set;
    set.s_lo = windows.front().first.lo;
    set.s_hi = windows.front().first.hi;
    for (const auto& [w, n] : windows) {
        scan_window(problem, w, n, settings, set);
        set.s_lo = std::min(set.s_lo, w.lo);
        set.s_hi = std::max(set.s_hi, w.hi);
        set.n_scan += n;
    }
    finalize(set, settings.merge_tol);
    return set;
}

}  // namespace radial
