#pragma once

#include <map>
#include <string>
#include <vector>

#include "radial/classification.hpp"

namespace radial {

/// How lhs is compared against rhs.
enum class BoundSense {
    Below,         // lhs < rhs
    BelowOrEqual,  // lhs <= rhs
    Above,         // lhs > rhs
};

struct BoundEntry {
    std::string name;    // stable identifier, e.g. "Prop2.max"
    std::string source;  // which estimate it comes from
    BoundSense sense = BoundSense::Below;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // rhs - lhs for upper bounds, lhs - rhs for lower bounds
    bool pass = false;
    bool applicable = true;
    double at = 0.0;      // location (t) the entry refers to, when meaningful
    std::string note;
    std::map<std::string, double> inputs;
};

struct BoundsReport {
    double lambda = 0.0;
    double source_norm = 0.0;
    std::vector<BoundEntry> entries;

    bool all_pass() const;
    void append(const std::vector<BoundEntry>& more);
};

/// 1 / (sqrt(2) pi), the derivative-bound constant at the largest zero.
double lemma2_constant();

/// Fills margin and pass from lhs, rhs and sense. Non-strict bounds pass at equality.
BoundEntry make_entry(std::string name, std::string source, BoundSense sense, double lhs, double rhs);

/// u(beta) < 2 R(4(lambda + M)) for maxima and |u(alpha)| <= R(lambda + M) for minima.
std::vector<BoundEntry> check_extrema_bounds(const ClassificationReport& report, const RadialProblem& problem);

/// Derivative bound at the k largest zeros of phi. The largest zero gets B,
/// the i-th before it B - i * delta.
std::vector<BoundEntry> check_zero_derivative_bounds(const ClassificationReport& report, const RadialProblem& problem,
                                                     double B = lemma2_constant(), double delta = -1.0);

/// eta - a < sqrt(2) pi sqrt(g+^{-1}(lambda/2) / lambda), where u(a) = g+^{-1}(lambda/2)
/// between the largest zero of phi and the following zero eta of u.
BoundEntry check_sturm_gap(const ClassificationReport& report, const SolutionProfile& profile);

struct AuxiliaryParams {
    double m1 = 0.0;
    double m2 = 1.0;
    double a = 1.0;
    double b = 4.0;
    double lambda_lo_decade = 2.0;
    double lambda_hi_decade = 9.0;
};

/// Mean-value integral bound, integration-by-parts bound and the inverse-ratio bound.
std::vector<BoundEntry> check_auxiliary_inequalities(const SolutionProfile& profile, const RadialProblem& problem,
                                                     const AuxiliaryParams& params = {});


/// |int_{g+^{-1}(lambda+m1)}^{g+^{-1}(lambda+m2)} (g(u) - lambda) du|
double mean_value_integral(const RadialProblem& problem, double m1, double m2);
/// m2 (m2 - m1) / min over mu in [m1, m2] of g'(g+^{-1}(lambda + mu)).
double mean_value_bound(const RadialProblem& problem, double m1, double m2);
/// |int_0^1 f u' dt| on the dense profile.
double parts_integral(const SolutionProfile& profile);
/// max over lambda probes of g+^{-1}(b lambda) / g+^{-1}(a lambda), with the last two probes.
struct GammaEstimate {
    double gamma = 0.0;
    double last = 0.0;
    double previous = 0.0;
};
GammaEstimate inverse_ratio_gamma(const Nonlinearity& nl, double a, double b, double lo_decade = 2.0,
                                  double hi_decade = 9.0);

/// 1 / g'(g+^{-1}(lambda)).
double inverse_slope_decay(const Nonlinearity& nl, double lambda);
/// R(4(lambda + M)) / (lambda g+^{-1}(lambda / 2)).
double amplitude_ratio(const Nonlinearity& nl, double lambda, double source_norm);

struct BoundsSettings {
    double B = -1.0;      // negative selects 1 / (sqrt(2) pi)
    double delta = -1.0;  // negative selects 0.1 * B
    AuxiliaryParams aux;
};

/// Every check on one solution.
BoundsReport verify_bounds(const SolutionProfile& profile, const ClassificationReport& report,
                           const BoundsSettings& settings = {});

}  // namespace radial
