#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radial/radial_ivp.hpp"

namespace radial {

/// A zero tau of phi(t) = u(t) - g+^{-1}(lambda + f(t)).
struct ZeroRecord {
    double tau = 0.0;
    double phi_value = 0.0;
    double phi_slope = 0.0;  // u'(tau) - [g+^{-1}(lambda + f)]'(tau)
    double u_slope = 0.0;
    bool simple = false;
    bool tangential = false;  // found as a |phi| dip without sign change
    bool among_k_largest = false;
};

struct CriticalPoint {
    double t = 0.0;
    double u = 0.0;
};

struct ClassificationReport {
    std::vector<ZeroRecord> zeros;  // sorted by tau
    int k = 0;                      // number of simple zeros
    bool degenerate = false;
    std::string class_label;        // "Z<k>" or "degenerate"
    std::vector<CriticalPoint> maxima;
    std::vector<CriticalPoint> minima;
    std::optional<double> eta;      // first zero of u after the largest tau
    double lambda = 0.0;
};

struct ClassifySettings {
    int grid_points = 4096;
    double zero_tol = 1e-9;
    double tangency_tol = 1e-7;
    double simple_rel = 1e-6;     // simple iff |phi'| > simple_rel * (1 + |u'|)
    double boundary_zero_tol = 1e-6;  // |u(1)| below this makes t = 1 a zero of u for eta
};

double phi(double t, const SolutionProfile& profile);

ClassificationReport classify(const SolutionProfile& profile, const ClassifySettings& settings = {});

/// Interior sign changes of u' (plus t = 0 by the sign of u''(0)).
std::pair<std::vector<CriticalPoint>, std::vector<CriticalPoint>> critical_points(const SolutionProfile& profile,
                                                                                  int grid_points = 4096);

}  // namespace radial
