#include "radial/classification.hpp"

#include <algorithm>
#include <cmath>

#include "radial/roots.hpp"

namespace radial {

double phi(double t, const SolutionProfile& profile) {
    const auto& pb = profile.problem();
    return profile.value(t) - pb.nonlinearity().inverse_plus(pb.lambda() + pb.source().value(t));
}

namespace {

std::vector<double> uniform_grid(int points) {
    std::vector<double> t(points);
    for (int i = 0; i < points; ++i) t[i] = static_cast<double>(i) / (points - 1);
    t.back() = 1.0;
    return t;
}

bool opposite(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

}  // namespace

std::pair<std::vector<CriticalPoint>, std::vector<CriticalPoint>> critical_points(const SolutionProfile& profile,
                                                                                  int grid_points) {
    std::vector<CriticalPoint> maxima, minima;
    const double curvature = profile.ddu().front();
    if (curvature < 0.0) maxima.push_back({0.0, profile.value(0.0)});
    if (curvature > 0.0) minima.push_back({0.0, profile.value(0.0)});

    const auto t = uniform_grid(grid_points);
    auto slope = [&](double x) { return profile.slope(x); };
    double prev = slope(t[1]);
    for (std::size_t i = 1; i + 1 < t.size(); ++i) {
        const double next = slope(t[i + 1]);
        if (opposite(prev, next) && !(i + 1 == t.size() - 1 && next == 0.0)) {
            const auto r = bisect(slope, t[i], t[i + 1], prev, next, 0.0, 1e-14);
            const CriticalPoint cp{r.root, profile.value(r.root)};
            (prev > 0.0 ? maxima : minima).push_back(cp);
        }
        prev = next;
    }
    return {std::move(maxima), std::move(minima)};
}

ClassificationReport classify(const SolutionProfile& profile, const ClassifySettings& settings) {
    ClassificationReport rep;
    rep.lambda = profile.problem().lambda();
    const auto t = uniform_grid(settings.grid_points);
    std::vector<double> values(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) values[i] = phi(t[i], profile);

    auto f_phi = [&](double x) { return phi(x, profile); };
    auto make_record = [&](double tau, bool tangential) {
        ZeroRecord z;
        z.tau = tau;
        z.phi_value = phi(tau, profile);
        z.u_slope = profile.slope(tau);
        z.phi_slope = z.u_slope - inverse_envelope_derivative(tau, profile.problem());
        z.tangential = tangential;
        z.simple = !tangential && std::abs(z.phi_slope) > settings.simple_rel * (1.0 + std::abs(z.u_slope));
        return z;
    };

    std::vector<bool> near_crossing(t.size(), false);
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        const bool crossing = opposite(values[i], values[i + 1]) || (values[i] == 0.0 && i > 0);
        if (!crossing) continue;
        near_crossing[i] = near_crossing[i + 1] = true;
        if (values[i] == 0.0) {
            rep.zeros.push_back(make_record(t[i], false));
            continue;
        }
        const auto r = bisect(f_phi, t[i], t[i + 1], values[i], values[i + 1], settings.zero_tol, 0.0);
        rep.zeros.push_back(make_record(r.root, false));
    }

    // Even-order touches: local dips of |phi| that never change sign.
    for (std::size_t i = 1; i + 1 < t.size(); ++i) {
        if (near_crossing[i] || near_crossing[i - 1] || near_crossing[i + 1]) continue;
        const double a = std::abs(values[i]);
        if (!(a < std::abs(values[i - 1]) && a <= std::abs(values[i + 1]))) continue;
        const auto dip = golden_argmax([&](double x) { return -std::abs(f_phi(x)); }, t[i - 1], t[i + 1], 1e-15);
        if (-dip.value > settings.tangency_tol) continue;
        const double best_t = dip.x;
        rep.zeros.push_back(make_record(best_t, true));
    }

    std::sort(rep.zeros.begin(), rep.zeros.end(), [](const ZeroRecord& a, const ZeroRecord& b) {
        return a.tau < b.tau;
    });
    rep.k = static_cast<int>(std::count_if(rep.zeros.begin(), rep.zeros.end(), [](const ZeroRecord& z) {
        return z.simple;
    }));
    rep.degenerate = rep.k != static_cast<int>(rep.zeros.size());
    rep.class_label = rep.degenerate ? "degenerate" : "Z" + std::to_string(rep.k);
    const auto tagged = std::min<std::size_t>(rep.zeros.size(), static_cast<std::size_t>(rep.k));
    for (std::size_t j = rep.zeros.size() - tagged; j < rep.zeros.size(); ++j) rep.zeros[j].among_k_largest = true;

    auto [maxima, minima] = critical_points(profile, settings.grid_points);
    rep.maxima = std::move(maxima);
    rep.minima = std::move(minima);

    if (!rep.zeros.empty()) {
        const double start = rep.zeros.back().tau;
        auto u = [&](double x) { return profile.value(x); };
        const int n = settings.grid_points;
        double prev_t = start, prev_u = u(start);
        for (int j = 1; j <= n && !rep.eta; ++j) {
            const double x = start + (1.0 - start) * j / n;
            const double ux = u(x);
            if (j < n && opposite(prev_u, ux)) {
                rep.eta = bisect(u, prev_t, x, prev_u, ux, 0.0, 1e-14).root;
            }
            prev_t = x;
            prev_u = ux;
        }
        if (!rep.eta && std::abs(profile.terminal()) <= settings.boundary_zero_tol) rep.eta = 1.0;
    }
    return rep;
}

}  // namespace radial
