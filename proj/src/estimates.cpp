#include "radial/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "radial/errors.hpp"
#include "radial/quadrature.hpp"
#include "radial/roots.hpp"

namespace radial {

bool BoundsReport::all_pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const BoundEntry& e) { return !e.applicable || e.pass; });
}

void BoundsReport::append(const std::vector<BoundEntry>& more) { entries.insert(entries.end(), more.begin(), more.end()); }

double lemma2_constant() { return 1.0 / (std::numbers::sqrt2 * std::numbers::pi); }

BoundEntry make_entry(std::string name, std::string source, BoundSense sense, double lhs, double rhs) {
    BoundEntry e;
    e.name = std::move(name);
    e.source = std::move(source);
    e.sense = sense;
    e.lhs = lhs;
    e.rhs = rhs;
    e.margin = sense == BoundSense::Above ? lhs - rhs : rhs - lhs;
    e.pass = e.margin > 0.0 || (sense == BoundSense::BelowOrEqual && e.margin == 0.0);
    return e;
}

std::vector<BoundEntry> check_extrema_bounds(const ClassificationReport& report, const RadialProblem& problem) {
    const auto& nl = problem.nonlinearity();
    const double lam = problem.lambda(), m = problem.source_norm();
    const double max_bound = 2.0 * nl.envelope(4.0 * (lam + m));
    const double min_bound = nl.envelope(lam + m);
    std::vector<BoundEntry> out;
    for (const auto& beta : report.maxima) {
        auto e = make_entry("Prop2.max", "a priori bound at a local maximum", BoundSense::Below, beta.u, max_bound);
        e.at = beta.t;
        e.inputs = {{"lambda", lam}, {"M", m}};
        out.push_back(std::move(e));
    }
    for (const auto& alpha : report.minima) {
        auto e = make_entry("Prop2.min", "a priori bound at a local minimum", BoundSense::BelowOrEqual,
                            std::abs(alpha.u), min_bound);
        e.at = alpha.t;
        e.inputs = {{"lambda", lam}, {"M", m}};
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<BoundEntry> check_zero_derivative_bounds(const ClassificationReport& report, const RadialProblem& problem,
                                                     double B, double delta) {
    if (delta < 0.0) delta = 0.1 * B;
    const double lam = problem.lambda();
    const double scale = std::sqrt(lam * problem.nonlinearity().inverse_plus(0.5 * lam));
    std::vector<BoundEntry> out;
    int rank = 0;  // 0 for the largest zero
    for (auto it = report.zeros.rbegin(); it != report.zeros.rend(); ++it) {
        if (!it->among_k_largest) continue;
        const double b_i = std::max(B - rank * delta, 0.0);
        auto e = make_entry(rank == 0 ? "Lemma2.largest" : "Lemma2.recurrence", "derivative bound at zeros of phi",
                            BoundSense::Above, std::abs(it->u_slope), b_i * scale);
        e.at = it->tau;
        e.inputs = {{"lambda", lam}, {"B", b_i}, {"rank", static_cast<double>(rank)}};
        out.push_back(std::move(e));
        ++rank;
    }
    return out;
}

BoundEntry check_sturm_gap(const ClassificationReport& report, const SolutionProfile& profile) {
    const auto& pb = profile.problem();
    const double lam = pb.lambda();
    BoundEntry e;
    e.name = "Lemma2.sturm";
    e.source = "Sturm comparison gap";
    e.sense = BoundSense::Below;
    e.applicable = false;
    e.inputs = {{"lambda", lam}};
    if (report.zeros.empty() || !report.eta) {
        e.note = "no zero of phi followed by a zero of u";
        return e;
    }
    const double level = pb.nonlinearity().inverse_plus(0.5 * lam);
    const double rhs = std::numbers::sqrt2 * std::numbers::pi * std::sqrt(level / lam);
    const double tau = report.zeros.back().tau, eta = *report.eta;
    auto h = [&](double t) { return profile.value(t) - level; };
    const double h_tau = h(tau), h_eta = h(eta);
    if (!(h_tau > 0.0 && h_eta < 0.0)) {
        e.note = "level g+^{-1}(lambda/2) not crossed on (tau_k, eta)";
        return e;
    }
    const double a = bisect(h, tau, eta, h_tau, h_eta, 0.0, 1e-14).root;
    e = make_entry("Lemma2.sturm", "Sturm comparison gap", BoundSense::Below, eta - a, rhs);
    e.at = a;
    e.inputs = {{"lambda", lam}, {"a", a}, {"eta", eta}, {"tau", tau}};
    if (pb.dimension() > 1) e.note = "heuristic for n > 1: the damping term is not covered by the comparison";
    return e;
}

double mean_value_integral(const RadialProblem& problem, double m1, double m2) {
    const auto& nl = problem.nonlinearity();
    const double lam = problem.lambda();
    const double x1 = nl.inverse_plus(lam + m1), x2 = nl.inverse_plus(lam + m2);
    return std::abs(adaptive_simpson([&](double u) { return nl.value(u) - lam; }, x1, x2, 1e-12));
}

double mean_value_bound(const RadialProblem& problem, double m1, double m2) {
    const auto& nl = problem.nonlinearity();
    const double lam = problem.lambda();
    const double slope = std::min(nl.derivative(nl.inverse_plus(lam + m1)), nl.derivative(nl.inverse_plus(lam + m2)));
    return m2 * std::abs((m2 - m1) / slope);
}

double parts_integral(const SolutionProfile& profile) {
    const auto& f = profile.problem().source();
    if (f.kind() == SourceKind::Zero) return 0.0;
    return std::abs(adaptive_simpson_panels([&](double t) { return f.value(t) * profile.slope(t); }, profile.grid(),
                                            1e-10));
}

GammaEstimate inverse_ratio_gamma(const Nonlinearity& nl, double a, double b, double lo_decade, double hi_decade) {
    const auto probes = log_probes(lo_decade, hi_decade, 8);
    GammaEstimate g;
    for (double lam : probes) {
        const double r = nl.inverse_plus(b * lam) / nl.inverse_plus(a * lam);
        g.gamma = std::max(g.gamma, r);
        g.previous = g.last;
        g.last = r;
    }
    return g;
}

double inverse_slope_decay(const Nonlinearity& nl, double lambda) {
    return 1.0 / nl.derivative(nl.inverse_plus(lambda));
}

double amplitude_ratio(const Nonlinearity& nl, double lambda, double source_norm) {
    return nl.envelope(4.0 * (lambda + source_norm)) / (lambda * nl.inverse_plus(0.5 * lambda));
}

std::vector<BoundEntry> check_auxiliary_inequalities(const SolutionProfile& profile, const RadialProblem& problem,
                                                     const AuxiliaryParams& p) {
    if (!(p.m1 < p.m2)) throw std::invalid_argument("auxiliary check needs m1 < m2");
    if (!(0.0 < p.a && p.a < p.b)) throw std::invalid_argument("auxiliary check needs 0 < a < b");
    const auto& nl = problem.nonlinearity();
    const double lam = problem.lambda(), m = problem.source_norm();
    std::vector<BoundEntry> out;

    auto e6 = make_entry("Eq6.mean_value", "mean value integral bound", BoundSense::BelowOrEqual,
                         mean_value_integral(problem, p.m1, p.m2), mean_value_bound(problem, p.m1, p.m2));
    e6.inputs = {{"lambda", lam}, {"m1", p.m1}, {"m2", p.m2}};
    out.push_back(std::move(e6));

    auto e8 = make_entry("Eq8.parts", "integration by parts bound", BoundSense::BelowOrEqual, parts_integral(profile),
                         6.0 * m * nl.envelope(4.0 * (lam + m)));
    e8.inputs = {{"lambda", lam}, {"M", m}};
    out.push_back(std::move(e8));

    const auto g = inverse_ratio_gamma(nl, p.a, p.b, p.lambda_lo_decade, p.lambda_hi_decade);
    const double drift = std::abs(g.last - g.previous) / g.previous;
    auto e9 = make_entry("Eq9.gamma", "inverse ratio stays bounded", BoundSense::BelowOrEqual, drift, 0.01);
    e9.pass = e9.pass && std::isfinite(g.gamma);
    e9.inputs = {{"gamma", g.gamma}, {"a", p.a}, {"b", p.b}};
    e9.note = "lhs is the relative change of the ratio over the last two probes";
    out.push_back(std::move(e9));
    return out;
}

BoundsReport verify_bounds(const SolutionProfile& profile, const ClassificationReport& report,
                           const BoundsSettings& settings) {
    const auto& pb = profile.problem();
    BoundsReport r;
    r.lambda = pb.lambda();
    r.source_norm = pb.source_norm();
    r.append(check_extrema_bounds(report, pb));
    if (report.k > 0) {
        const double B = settings.B < 0.0 ? lemma2_constant() : settings.B;
        r.append(check_zero_derivative_bounds(report, pb, B, settings.delta));
    }
    r.entries.push_back(check_sturm_gap(report, profile));
    r.append(check_auxiliary_inequalities(profile, pb, settings.aux));
    return r;
}

}  // namespace radial
