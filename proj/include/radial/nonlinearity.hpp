#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace radial {

enum class NonlinearityKind { PiecewisePower, Zero, Custom };

std::string to_string(NonlinearityKind kind);

/// The reaction term g together with its branch structure.
///
/// Built-in family: g(u) = u^p for u >= 0 and |u|^q for u < 0. The positive
/// branch g+ is g restricted to [A, inf), the negative branch g- is g
/// restricted to (-inf, -A]. Custom nonlinearities supply g and g' as
/// callables and have their branch inverses computed by bracketed bisection.
class Nonlinearity {
public:
    using Function = std::function<double(double)>;

    static Nonlinearity piecewise_power(double p = 2.0, double q = 5.0, double threshold = 1.0);
    /// g == 0. Only meant for validating the integrator; it has no branch inverses.
    static Nonlinearity zero();
    static Nonlinearity custom(Function g, Function g_prime, double threshold, std::string name = "custom");

    NonlinearityKind kind() const { return kind_; }
    double p() const { return p_; }
    double q() const { return q_; }
    double threshold() const { return threshold_; }
    const std::string& name() const { return name_; }

    double value(double u) const;
    /// Derivative of the active branch. At u = 0 the common one-sided limit
    /// (0 for p, q > 1) is returned.
    double derivative(double u) const;

    /// Unique x >= A with g(x) = y. Throws DomainError for y < g(A).
    double inverse_plus(double y) const;
    /// Unique x <= -A with g(x) = y. Throws DomainError for y < g(-A).
    double inverse_minus(double y) const;
    /// R(y) = max(|g-^{-1}(y)|, |g+^{-1}(y)|).
    double envelope(double y) const;

private:
    NonlinearityKind kind_ = NonlinearityKind::PiecewisePower;
    double p_ = 2.0;
    double q_ = 5.0;
    double threshold_ = 1.0;
    std::string name_;
    Function g_;
    Function g_prime_;
};

inline double eval_g(const Nonlinearity& nl, double u) { return nl.value(u); }
inline double eval_g_prime(const Nonlinearity& nl, double u) { return nl.derivative(u); }
inline double inverse_plus(double y, const Nonlinearity& nl) { return nl.inverse_plus(y); }
inline double inverse_minus(double y, const Nonlinearity& nl) { return nl.inverse_minus(y); }
inline double envelope_R(double y, const Nonlinearity& nl) { return nl.envelope(y); }

struct ConditionSample {
    std::string expression;  // "g(x)/x", "|g(-x)/x|" or "ratio"
    double x;
    double value;
};

/// Finite-probe evidence for the growth hypotheses on g.
struct ConditionReport {
    bool superlinear_pos = false;
    bool superlinear_neg = false;
    bool ratio_condition = false;
    bool shape_ok = false;
    bool verdict = false;
    double ratio_exponent = 0.0;  // fitted log-log slope of the ratio expression
    std::vector<ConditionSample> samples;
};

struct ConditionSettings {
    double growth_threshold = 1e2;      // |g(x)/x| at the last probe
    double min_ratio_exponent = 1e-2;   // fitted slope of the ratio expression
    int points_per_decade = 64;
};

/// Log-spaced probes from 10^lo_decade to 10^hi_decade.
std::vector<double> log_probes(double lo_decade = 3.0, double hi_decade = 9.0, int points_per_decade = 64);

ConditionReport verify_conditions(const Nonlinearity& nl, std::span<const double> probe_points,
                                  const ConditionSettings& settings = {});
ConditionReport verify_conditions(const Nonlinearity& nl);

}  // namespace radial
