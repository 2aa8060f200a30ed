#pragma once

#include <cmath>

namespace radial {

namespace detail {

template <class F>
double simpson_step(F& f, double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double diff = left + right - whole;
    if (depth <= 0 || std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
template <class F>
double adaptive_simpson(F f, double a, double b, double tol = 1e-10, int max_depth = 48) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

/// Composite adaptive Simpson over consecutive panels [x_i, x_{i+1}].
template <class F, class Range>
double adaptive_simpson_panels(F f, const Range& nodes, double tol = 1e-10) {
    double total = 0.0;
    const auto n = nodes.size();
    if (n < 2) return 0.0;
    const double span = nodes[n - 1] - nodes[0];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double w = (nodes[i + 1] - nodes[i]) / span;
        total += adaptive_simpson(f, nodes[i], nodes[i + 1], tol * w, 30);
    }
    return total;
}

}  // namespace radial
