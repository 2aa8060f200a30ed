#include "radial/nonlinearity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "radial/errors.hpp"
#include "radial/roots.hpp"

namespace radial {

std::string to_string(NonlinearityKind kind) {
    switch (kind) {
        case NonlinearityKind::PiecewisePower: return "power";
        case NonlinearityKind::Zero: return "zero";
        case NonlinearityKind::Custom: return "custom";
    }
    return "unknown";
}

Nonlinearity Nonlinearity::piecewise_power(double p, double q, double threshold) {
    if (!(p > 0.0) || !(q > 0.0)) throw std::invalid_argument("exponents must be positive");
    if (!(threshold > 0.0)) throw std::invalid_argument("branch threshold A must be positive");
    Nonlinearity nl;
    nl.kind_ = NonlinearityKind::PiecewisePower;
    nl.p_ = p;
    nl.q_ = q;
    nl.threshold_ = threshold;
    nl.name_ = "power";
    return nl;
}

Nonlinearity Nonlinearity::zero() {
    Nonlinearity nl;
    nl.kind_ = NonlinearityKind::Zero;
    nl.p_ = 0.0;
    nl.q_ = 0.0;
    nl.name_ = "zero";
    return nl;
}

Nonlinearity Nonlinearity::custom(Function g, Function g_prime, double threshold, std::string name) {
    if (!g || !g_prime) throw std::invalid_argument("custom nonlinearity needs g and g'");
    if (!(threshold > 0.0)) throw std::invalid_argument("branch threshold A must be positive");
    Nonlinearity nl;
    nl.kind_ = NonlinearityKind::Custom;
    nl.p_ = 0.0;
    nl.q_ = 0.0;
    nl.threshold_ = threshold;
    nl.name_ = std::move(name);
    nl.g_ = std::move(g);
    nl.g_prime_ = std::move(g_prime);
    return nl;
}

double Nonlinearity::value(double u) const {
    switch (kind_) {
        case NonlinearityKind::PiecewisePower:
            return u >= 0.0 ? std::pow(u, p_) : std::pow(-u, q_);
        case NonlinearityKind::Zero:
            return 0.0;
        case NonlinearityKind::Custom:
            return g_(u);
    }
    return 0.0;
}

double Nonlinearity::derivative(double u) const {
    switch (kind_) {
        case NonlinearityKind::PiecewisePower:
            if (u > 0.0) return p_ * std::pow(u, p_ - 1.0);
            if (u < 0.0) return -q_ * std::pow(-u, q_ - 1.0);
            return 0.0;
        case NonlinearityKind::Zero:
            return 0.0;
        case NonlinearityKind::Custom:
            return g_prime_(u);
    }
    return 0.0;
}

namespace {

// Monotone branch inversion on [A, inf) in the direction `dir` (+1 or -1).
double invert_branch(const Nonlinearity::Function& g, double threshold, double dir, double y) {
    double inner = threshold;
    double outer = 2.0 * std::max(threshold, 1.0);
    int doublings = 0;
    while (g(dir * outer) < y) {
        inner = outer;
        outer *= 2.0;
        if (++doublings > 2000) throw DomainError("branch inverse: no bracket found");
    }
    auto h = [&](double x) { return g(dir * x) - y; };
    const auto r = bisect(h, inner, outer, h(inner), h(outer), 0.0, 1e-13 * outer);
    return dir * r.root;
}

}  // namespace

double Nonlinearity::inverse_plus(double y) const {
    switch (kind_) {
        case NonlinearityKind::PiecewisePower: {
            const double floor = std::pow(threshold_, p_);
            if (!(y >= floor)) throw DomainError("inverse_plus: argument below g(A)");
            return std::pow(y, 1.0 / p_);
        }
        case NonlinearityKind::Zero:
            throw DomainError("inverse_plus: zero nonlinearity has no branch inverse");
        case NonlinearityKind::Custom:
            if (!(y >= g_(threshold_))) throw DomainError("inverse_plus: argument below g(A)");
            return invert_branch(g_, threshold_, 1.0, y);
    }
    return 0.0;
}

double Nonlinearity::inverse_minus(double y) const {
    switch (kind_) {
        case NonlinearityKind::PiecewisePower: {
            const double floor = std::pow(threshold_, q_);
            if (!(y >= floor)) throw DomainError("inverse_minus: argument below g(-A)");
            return -std::pow(y, 1.0 / q_);
        }
        case NonlinearityKind::Zero:
            throw DomainError("inverse_minus: zero nonlinearity has no branch inverse");
        case NonlinearityKind::Custom:
            if (!(y >= g_(-threshold_))) throw DomainError("inverse_minus: argument below g(-A)");
            return invert_branch(g_, threshold_, -1.0, y);
    }
    return 0.0;
}

double Nonlinearity::envelope(double y) const {
    return std::max(std::abs(inverse_minus(y)), std::abs(inverse_plus(y)));
}

std::vector<double> log_probes(double lo_decade, double hi_decade, int points_per_decade) {
    if (!(hi_decade > lo_decade) || points_per_decade < 1)
        throw std::invalid_argument("log_probes: empty range");
    const int count = static_cast<int>(std::lround((hi_decade - lo_decade) * points_per_decade));
    std::vector<double> xs;
    xs.reserve(count + 1);
    for (int i = 0; i <= count; ++i)
        xs.push_back(std::pow(10.0, lo_decade + (hi_decade - lo_decade) * i / count));
    return xs;
}

namespace {

bool strictly_increasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1])) return false;
    return !v.empty();
}

// Positive, strictly monotone in |x| and convex along the sampled points
// x_i = dir * s_i (s_i increasing).
bool branch_shape_ok(const Nonlinearity& nl, double dir, const std::vector<double>& s) {
    double prev_slope = -INFINITY;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double gi = nl.value(dir * s[i]);
        if (!(gi > 0.0) || !std::isfinite(gi)) return false;
        if (i == 0) continue;
        const double gprev = nl.value(dir * s[i - 1]);
        if (!(gi > gprev)) return false;
        // slope of g with respect to |x|; convexity of the branch means it is nondecreasing
        const double slope = (gi - gprev) / (s[i] - s[i - 1]);
        if (slope < prev_slope * (1.0 - 1e-9)) return false;
        prev_slope = slope;
    }
    return true;
}

}  // namespace

ConditionReport verify_conditions(const Nonlinearity& nl, std::span<const double> probes,
                                  const ConditionSettings& settings) {
    if (probes.size() < 2) throw std::invalid_argument("verify_conditions: need at least two probes");
    for (std::size_t i = 1; i < probes.size(); ++i)
        if (!(probes[i] > probes[i - 1]) || !(probes[0] > 0.0))
            throw std::invalid_argument("verify_conditions: probes must be positive and increasing");

    ConditionReport report;
    std::vector<double> pos, neg, ratio;
    for (double x : probes) {
        const double rp = nl.value(x) / x;
        const double rn = std::abs(nl.value(-x) / x);
        pos.push_back(rp);
        neg.push_back(rn);
        report.samples.push_back({"g(x)/x", x, rp});
        report.samples.push_back({"|g(-x)/x|", x, rn});
    }
    report.superlinear_pos = strictly_increasing(pos) && pos.back() > settings.growth_threshold;
    report.superlinear_neg = strictly_increasing(neg) && neg.back() > settings.growth_threshold;

    try {
        for (double x : probes) {
            const double e = std::sqrt(nl.envelope(x) / x) * nl.inverse_plus(x) / nl.inverse_minus(x);
            ratio.push_back(std::abs(e));
            report.samples.push_back({"ratio", x, e});
        }
        report.ratio_exponent = std::log(ratio.back() / ratio.front()) / std::log(probes.back() / probes.front());
        report.ratio_condition = strictly_increasing(ratio) && report.ratio_exponent > settings.min_ratio_exponent;
    } catch (const std::exception&) {
        report.ratio_condition = false;
    }

    const double a = nl.kind() == NonlinearityKind::Zero ? 1.0 : nl.threshold();
    const double hi = std::max(probes.back(), 10.0 * a);
    const auto grid = log_probes(std::log10(a), std::log10(hi), settings.points_per_decade);
    report.shape_ok = branch_shape_ok(nl, 1.0, grid) && branch_shape_ok(nl, -1.0, grid);

    report.verdict = report.superlinear_pos && report.superlinear_neg && report.ratio_condition && report.shape_ok;
    return report;
}

ConditionReport verify_conditions(const Nonlinearity& nl) {
    const auto probes = log_probes();
    return verify_conditions(nl, probes);
}

}  // namespace radial
