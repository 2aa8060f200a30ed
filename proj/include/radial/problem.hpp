#pragma once

#include <string>
#include <vector>

#include "radial/nonlinearity.hpp"

namespace radial {

enum class SourceKind { Zero, Polynomial, Cosine };

std::string to_string(SourceKind kind);
SourceKind source_kind_from_string(const std::string& name);

/// Radial source term f on [0, 1] with closed-form derivative.
///   Polynomial: f(t) = sum_i c_i t^i
///   Cosine:     f(t) = sum_j c_j cos(j pi t)
class SourceTerm {
public:
    SourceTerm() = default;
    SourceTerm(SourceKind kind, std::vector<double> coefficients);

    static SourceTerm zero() { return {}; }
    static SourceTerm polynomial(std::vector<double> c) { return {SourceKind::Polynomial, std::move(c)}; }
    static SourceTerm cosine(std::vector<double> c) { return {SourceKind::Cosine, std::move(c)}; }

    SourceKind kind() const { return kind_; }
    const std::vector<double>& coefficients() const { return coefficients_; }

    double value(double t) const;
    double derivative(double t) const;
    /// c * f, same family.
    SourceTerm scaled(double c) const;

private:
    SourceKind kind_ = SourceKind::Zero;
    std::vector<double> coefficients_;
};

/// sup|f| + sup|f'| over [0, 1]: a 2048-interval grid, then golden-section
/// refinement around every sampled interior local maximum.
double c1_norm(const SourceTerm& f);

/// One instance of -u'' - ((n-1)/t) u' = g(u) - lambda - f(t), u'(0) = 0, u(1) = 0.
class RadialProblem {
public:
    RadialProblem(int dimension, double lambda, SourceTerm source, Nonlinearity nl);

    int dimension() const { return dimension_; }
    double lambda() const { return lambda_; }
    const SourceTerm& source() const { return source_; }
    const Nonlinearity& nonlinearity() const { return nl_; }
    /// Cached C^1 norm M of the source term.
    double source_norm() const { return source_norm_; }

    RadialProblem with_lambda(double lambda) const;

private:
    int dimension_;
    double lambda_;
    SourceTerm source_;
    Nonlinearity nl_;
    double source_norm_;
};

/// d/dt g+^{-1}(lambda + f(t)) = f'(t) / g'(g+^{-1}(lambda + f(t))).
double inverse_envelope_derivative(double t, const RadialProblem& problem);

}  // namespace radial
