#pragma once
// Independent reference computations used only by the test suites. Nothing
// here calls into the library's integrator, root finder or quadrature.

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>

namespace oracle {

struct Model {
    int n = 1;
    double lambda = 100.0;
    std::function<double(double)> g = [](double u) { return u >= 0 ? u * u : std::pow(-u, 5); };
    std::function<double(double)> f = [](double) { return 0.0; };
};

struct Escaped {
    int sign;
};

/// u(1; s) with a Runge-Kutta-Fehlberg 7(8) controlled stepper, or nullopt
/// with `escape_sign` set when |u| passes the guard.
inline std::optional<double> terminal(const Model& m, double s, double tol = 1e-12, int* escape_sign = nullptr,
                                      double t0 = 1e-7, double guard = 1e12) {
    using State = std::array<double, 2>;
    namespace odeint = boost::numeric::odeint;
    auto sys = [&](const State& y, State& dy, double t) {
        dy[0] = y[1];
        dy[1] = -((m.n - 1) / t) * y[1] - (m.g(y[0]) - m.lambda - m.f(t));
    };
    // u = s + c t^2 / 2 with c = -(g(s) - lambda - f(0)) / n
    const double c = -(m.g(s) - m.lambda - m.f(0.0)) / m.n;
    State y{s + 0.5 * c * t0 * t0, c * t0};
    auto stepper = odeint::make_controlled(tol, tol, odeint::runge_kutta_fehlberg78<State>());
    try {
        odeint::integrate_adaptive(stepper, sys, y, t0, 1.0, 1e-4, [&](const State& st, double) {
            if (!(std::abs(st[0]) < guard)) throw Escaped{st[0] < 0 ? -1 : 1};
        });
    } catch (const Escaped& e) {
        if (escape_sign) *escape_sign = e.sign;
        return std::nullopt;
    } catch (const odeint::step_adjustment_error&) {
        if (escape_sign) *escape_sign = y[0] < 0 ? -1 : 1;
        return std::nullopt;
    }
    return y[0];
}

inline double signed_terminal(const Model& m, double s, double tol = 1e-12) {
    int sign = 0;
    const auto v = terminal(m, s, tol, &sign);
    return v ? *v : sign * std::numeric_limits<double>::infinity();
}

/// Brute-force scan at spacing ds, 60 bisection steps per sign change, then
/// keeps roots with g(s) <= lambda + f(0) (u''(0) >= 0).
inline std::vector<double> solutions(const Model& m, double s_lo, double s_hi, double ds = 1e-3) {
    std::vector<double> roots;
    const auto count = static_cast<long>(std::ceil((s_hi - s_lo) / ds));
    double a = s_lo, fa = signed_terminal(m, a);
    for (long i = 1; i <= count; ++i) {
        const double b = std::min(s_hi, s_lo + i * ds);
        const double fb = signed_terminal(m, b);
        if ((fa < 0) != (fb < 0)) {
            double lo = a, hi = b, flo = fa;
            for (int k = 0; k < 60; ++k) {
                const double mid = 0.5 * (lo + hi);
                const double fm = signed_terminal(m, mid);
                if ((fm < 0) == (flo < 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            const double r = 0.5 * (lo + hi);
            if (std::isfinite(signed_terminal(m, r)) && m.g(r) <= m.lambda + m.f(0.0) + m.n * 1e-9)
                roots.push_back(r);
        }
        a = b;
        fa = fb;
    }
    return roots;
}

/// Gauss-Kronrod 61-point adaptive quadrature.
inline double integral(const std::function<double(double)>& h, double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(h, a, b, 15, 1e-14);
}

/// Number of sign changes of h on a uniform grid of `points` samples over [0, 1].
inline int sign_changes(const std::function<double(double)>& h, int points = 100000) {
    int changes = 0;
    double prev = h(0.0);
    for (int i = 1; i < points; ++i) {
        const double v = h(static_cast<double>(i) / (points - 1));
        if ((prev < 0 && v > 0) || (prev > 0 && v < 0)) ++changes;
        if (v != 0.0) prev = v;
    }
    return changes;
}

}  // namespace oracle
