#include "radial/problem.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "radial/roots.hpp"

namespace radial {

std::string to_string(SourceKind kind) {
    switch (kind) {
        case SourceKind::Zero: return "zero";
        case SourceKind::Polynomial: return "polynomial";
        case SourceKind::Cosine: return "cosine";
    }
    return "unknown";
}

SourceKind source_kind_from_string(const std::string& name) {
    if (name == "zero") return SourceKind::Zero;
    if (name == "polynomial") return SourceKind::Polynomial;
    if (name == "cosine") return SourceKind::Cosine;
    throw std::invalid_argument("unknown source kind '" + name + "'");
}

SourceTerm::SourceTerm(SourceKind kind, std::vector<double> coefficients)
    : kind_(kind), coefficients_(std::move(coefficients)) {
    for (double c : coefficients_)
        if (!std::isfinite(c)) throw std::invalid_argument("source coefficients must be finite");
    if (kind_ == SourceKind::Zero) coefficients_.clear();
}

double SourceTerm::value(double t) const {
    double acc = 0.0;
    switch (kind_) {
        case SourceKind::Zero:
            return 0.0;
        case SourceKind::Polynomial:
            for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * t + *it;
            return acc;
        case SourceKind::Cosine:
            for (std::size_t j = 0; j < coefficients_.size(); ++j)
                acc += coefficients_[j] * std::cos(static_cast<double>(j) * std::numbers::pi * t);
            return acc;
    }
    return 0.0;
}

double SourceTerm::derivative(double t) const {
    double acc = 0.0;
    switch (kind_) {
        case SourceKind::Zero:
            return 0.0;
        case SourceKind::Polynomial:
            for (std::size_t i = coefficients_.size(); i-- > 1;)
                acc = acc * t + static_cast<double>(i) * coefficients_[i];
            return acc;
        case SourceKind::Cosine:
            for (std::size_t j = 1; j < coefficients_.size(); ++j) {
                const double w = static_cast<double>(j) * std::numbers::pi;
                acc -= coefficients_[j] * w * std::sin(w * t);
            }
            return acc;
    }
    return 0.0;
}

SourceTerm SourceTerm::scaled(double c) const {
    auto coeffs = coefficients_;
    for (double& x : coeffs) x *= c;
    return {kind_, std::move(coeffs)};
}

namespace {

template <class F>
double sup_abs(F&& h) {
    constexpr int intervals = 2048;
    std::vector<double> samples(intervals + 1);
    for (int i = 0; i <= intervals; ++i) samples[i] = std::abs(h(static_cast<double>(i) / intervals));
    double best = *std::max_element(samples.begin(), samples.end());
    for (int i = 1; i < intervals; ++i) {
        if (samples[i] >= samples[i - 1] && samples[i] >= samples[i + 1] && samples[i] > 0.0) {
            const double a = static_cast<double>(i - 1) / intervals;
            const double b = static_cast<double>(i + 1) / intervals;
            best = std::max(best, golden_max([&](double t) { return std::abs(h(t)); }, a, b));
        }
    }
    return best;
}

}  // namespace

double c1_norm(const SourceTerm& f) {
    if (f.kind() == SourceKind::Zero) return 0.0;
    return sup_abs([&](double t) { return f.value(t); }) + sup_abs([&](double t) { return f.derivative(t); });
}

RadialProblem::RadialProblem(int dimension, double lambda, SourceTerm source, Nonlinearity nl)
    : dimension_(dimension), lambda_(lambda), source_(std::move(source)), nl_(std::move(nl)) {
    if (dimension_ < 1) throw std::invalid_argument("dimension n must be at least 1");
    if (!(lambda_ > 0.0) || !std::isfinite(lambda_)) throw std::invalid_argument("lambda must be positive");
    source_norm_ = c1_norm(source_);
}

RadialProblem RadialProblem::with_lambda(double lambda) const {
    return {dimension_, lambda, source_, nl_};
}

double inverse_envelope_derivative(double t, const RadialProblem& problem) {
    const auto& nl = problem.nonlinearity();
    const double level = nl.inverse_plus(problem.lambda() + problem.source().value(t));
    return problem.source().derivative(t) / nl.derivative(level);
}

}  // namespace radial
