#include "radial/radial_ivp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "radial/errors.hpp"

namespace radial {

SolutionProfile::SolutionProfile(RadialProblem problem, double s0, std::vector<double> grid, std::vector<double> u,
                                 std::vector<double> du, std::vector<double> ddu, IntegrationStats stats)
    : problem_(std::move(problem)),
      s0_(s0),
      grid_(std::move(grid)),
      u_(std::move(u)),
      du_(std::move(du)),
      ddu_(std::move(ddu)),
      stats_(stats) {
    const auto n = grid_.size();
    if (n < 2 || u_.size() != n || du_.size() != n || ddu_.size() != n)
        throw std::invalid_argument("profile arrays must share a length of at least 2");
    for (std::size_t i = 1; i < n; ++i)
        if (!(grid_[i] > grid_[i - 1])) throw std::invalid_argument("profile grid must be strictly increasing");
}

SolutionProfile SolutionProfile::from_samples(RadialProblem problem, std::vector<double> grid, std::vector<double> u,
                                              std::vector<double> du, std::vector<double> ddu) {
    const auto n = grid.size();
    if (ddu.empty() && n >= 3 && du.size() == n) {
        ddu.resize(n);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double h0 = grid[i] - grid[i - 1];
            const double h1 = grid[i + 1] - grid[i];
            ddu[i] = (-h1 / (h0 * (h0 + h1))) * du[i - 1] + ((h1 - h0) / (h0 * h1)) * du[i] +
                     (h0 / (h1 * (h0 + h1))) * du[i + 1];
        }
        ddu[0] = (du[1] - du[0]) / (grid[1] - grid[0]);
        ddu[n - 1] = (du[n - 1] - du[n - 2]) / (grid[n - 1] - grid[n - 2]);
    }
    const double s0 = u.empty() ? 0.0 : u.front();
    return {std::move(problem), s0, std::move(grid), std::move(u), std::move(du), std::move(ddu)};
}

std::size_t SolutionProfile::interval(double t) const {
    auto it = std::upper_bound(grid_.begin(), grid_.end(), t);
    if (it == grid_.begin()) return 0;
    auto i = static_cast<std::size_t>(it - grid_.begin()) - 1;
    return std::min(i, grid_.size() - 2);
}

namespace {

// Quintic Hermite on [0, 1] from values, first and second derivatives at both
// ends (derivatives already scaled by h and h^2).
double quintic(double s, double y0, double d0, double c0, double y1, double d1, double c1) {
    const double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;
    return (1 - 10 * s3 + 15 * s4 - 6 * s5) * y0 + (s - 6 * s3 + 8 * s4 - 3 * s5) * d0 +
           0.5 * (s2 - 3 * s3 + 3 * s4 - s5) * c0 + (10 * s3 - 15 * s4 + 6 * s5) * y1 +
           (-4 * s3 + 7 * s4 - 3 * s5) * d1 + 0.5 * (s3 - 2 * s4 + s5) * c1;
}

// d/ds of quintic().
double quintic_ds(double s, double y0, double d0, double c0, double y1, double d1, double c1) {
    const double s2 = s * s, s3 = s2 * s, s4 = s3 * s;
    return (-30 * s2 + 60 * s3 - 30 * s4) * y0 + (1 - 18 * s2 + 32 * s3 - 15 * s4) * d0 +
           0.5 * (2 * s - 9 * s2 + 12 * s3 - 5 * s4) * c0 + (30 * s2 - 60 * s3 + 30 * s4) * y1 +
           (-12 * s2 + 28 * s3 - 15 * s4) * d1 + 0.5 * (3 * s2 - 8 * s3 + 5 * s4) * c1;
}

}  // namespace

double SolutionProfile::value(double t) const {
    const auto i = interval(t);
    const double h = grid_[i + 1] - grid_[i];
    return quintic((t - grid_[i]) / h, u_[i], h * du_[i], h * h * ddu_[i], u_[i + 1], h * du_[i + 1],
                   h * h * ddu_[i + 1]);
}

double SolutionProfile::slope(double t) const {
    const auto i = interval(t);
    const double h = grid_[i + 1] - grid_[i];
    return quintic_ds((t - grid_[i]) / h, u_[i], h * du_[i], h * h * ddu_[i], u_[i + 1], h * du_[i + 1],
                      h * h * ddu_[i + 1]) /
           h;
}

double rhs(double t, double u, double du, const RadialProblem& problem) {
    const double forcing = problem.nonlinearity().value(u) - problem.lambda() - problem.source().value(t);
    if (t == 0.0) return -forcing / problem.dimension();
    return -((problem.dimension() - 1) / t) * du - forcing;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr std::array<double, 7> c{0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr std::array<double, 7> b{35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr std::array<double, 7> e{71.0 / 57600, 0.0, -71.0 / 16695, 71.0 / 1920, -17253.0 / 339200, 22.0 / 525,
                                  -1.0 / 40};

struct State {
    double u;
    double v;
};

}  // namespace

IvpResult shoot(double s0, const RadialProblem& problem, const IntegratorSettings& cfg) {
    if (!(cfg.atol > 0.0) || !(cfg.rtol > 0.0) || !(cfg.t_start > 0.0) || !(cfg.max_step > 0.0))
        throw std::invalid_argument("integrator tolerances and steps must be positive");

    IvpResult out;
    out.stats.atol = cfg.atol;
    out.stats.rtol = cfg.rtol;
    out.stats.t_start = cfg.t_start;

    auto f = [&](double t, State y) {
        ++out.stats.rhs_evaluations;
        return State{y.v, rhs(t, y.u, y.v, problem)};
    };
    auto push = [&](double t, State y, double acc) {
        out.grid.push_back(t);
        out.u.push_back(y.u);
        out.du.push_back(y.v);
        out.ddu.push_back(acc);
    };

    const double curvature = rhs(0.0, s0, 0.0, problem);
    push(0.0, {s0, 0.0}, curvature);

    double t = cfg.t_start;
    State y{s0 + 0.5 * curvature * t * t, curvature * t};
    State k1 = f(t, y);
    push(t, y, k1.v);

    double h = std::min(cfg.max_step, 1e-3);
    while (t < 1.0) {
        if (out.stats.steps + out.stats.rejected >= cfg.max_steps) {
            out.status = IvpStatus::StepFailure;
            out.t_stop = t;
            return out;
        }
        bool last = false;
        if (t + h >= 1.0) {
            h = 1.0 - t;
            last = true;
        }
        auto stage = [&](double w1, double w2, double w3, double w4, double w5, State s2, State s3,
                         State s4, State s5) {
            return State{y.u + h * (w1 * k1.u + w2 * s2.u + w3 * s3.u + w4 * s4.u + w5 * s5.u),
                         y.v + h * (w1 * k1.v + w2 * s2.v + w3 * s3.v + w4 * s4.v + w5 * s5.v)};
        };
        const State zero{0.0, 0.0};
        const State k2 = f(t + c[1] * h, stage(a21, 0, 0, 0, 0, zero, zero, zero, zero));
        const State k3 = f(t + c[2] * h, stage(a31, a32, 0, 0, 0, k2, zero, zero, zero));
        const State k4 = f(t + c[3] * h, stage(a41, a42, a43, 0, 0, k2, k3, zero, zero));
        const State k5 = f(t + c[4] * h, stage(a51, a52, a53, a54, 0, k2, k3, k4, zero));
        const State k6 = f(t + h, stage(a61, a62, a63, a64, a65, k2, k3, k4, k5));
        const State y_new{y.u + h * (b[0] * k1.u + b[2] * k3.u + b[3] * k4.u + b[4] * k5.u + b[5] * k6.u),
                          y.v + h * (b[0] * k1.v + b[2] * k3.v + b[3] * k4.v + b[4] * k5.v + b[5] * k6.v)};
        const double t_new = last ? 1.0 : t + h;
        const State k7 = f(t_new, y_new);

        const double err_u = h * (e[0] * k1.u + e[2] * k3.u + e[3] * k4.u + e[4] * k5.u + e[5] * k6.u + e[6] * k7.u);
        const double err_v = h * (e[0] * k1.v + e[2] * k3.v + e[3] * k4.v + e[4] * k5.v + e[5] * k6.v + e[6] * k7.v);
        const double sc_u = cfg.atol + cfg.rtol * std::max(std::abs(y.u), std::abs(y_new.u));
        const double sc_v = cfg.atol + cfg.rtol * std::max(std::abs(y.v), std::abs(y_new.v));
        double err = std::max(std::abs(err_u) / sc_u, std::abs(err_v) / sc_v);
        if (!std::isfinite(err)) err = 1e10;

        if (err <= 1.0) {
            ++out.stats.steps;
            if (std::abs(y_new.u) > cfg.overflow_guard || !std::isfinite(k7.v)) {
                out.status = IvpStatus::BlowUp;
                out.blowup_sign = y_new.u < 0.0 ? -1 : 1;
                out.t_stop = t_new;
                return out;
            }
            t = t_new;
            y = y_new;
            k1 = k7;
            push(t, y, k1.v);
        } else {
            ++out.stats.rejected;
        }
        const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        h = std::min(h * (err <= 1.0 ? factor : std::min(factor, 1.0)), cfg.max_step);
        if (t < 1.0 && h < cfg.min_step * std::max(1.0, t)) {
            // An escaping trajectory can stall the controller before the guard is reached.
            if (std::abs(y.u) > std::sqrt(cfg.overflow_guard)) {
                out.status = IvpStatus::BlowUp;
                out.blowup_sign = y.u < 0.0 ? -1 : 1;
            } else {
                out.status = IvpStatus::StepFailure;
            }
            out.t_stop = t;
            return out;
        }
    }
    return out;
}

SolutionProfile integrate(double s0, const RadialProblem& problem, const IntegratorSettings& settings) {
    auto r = shoot(s0, problem, settings);
    switch (r.status) {
        case IvpStatus::BlowUp:
            throw BlowUpError("trajectory crossed the overflow guard before t = 1", r.blowup_sign, r.t_stop);
        case IvpStatus::StepFailure:
            throw StepFailureError("step size underflow at t = " + std::to_string(r.t_stop));
        case IvpStatus::Completed:
            break;
    }
    return {problem, s0, std::move(r.grid), std::move(r.u), std::move(r.du), std::move(r.ddu), r.stats};
}

double residual_norm(const SolutionProfile& profile) {
    if (profile.size() < 3) throw std::invalid_argument("residual_norm needs at least three nodes");
    constexpr int points = 4096;
    const double h = 1.0 / (points - 1);
    const auto& pb = profile.problem();
    const double n1 = pb.dimension() - 1;
    double worst = 0.0;
    double prev = profile.value(0.0);
    double cur = profile.value(h);
    for (int i = 1; i + 1 < points; ++i) {
        const double t = i * h;
        const double next = profile.value((i + 1) * h);
        const double upp = (next - 2.0 * cur + prev) / (h * h);
        const double r = upp + (n1 / t) * profile.slope(t) + pb.nonlinearity().value(cur) - pb.lambda() -
                         pb.source().value(t);
        worst = std::max(worst, std::abs(r));
        prev = cur;
        cur = next;
    }
    return worst / (1.0 + pb.lambda());
}

}  // namespace radial
