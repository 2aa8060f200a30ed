#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

namespace radial {

struct BisectionResult {
    double lo;
    double hi;
    double root;     // endpoint or midpoint with the smallest |f|
    double value;    // f(root)
    std::size_t iterations;
};

/// Sign-preserving bisection on [lo, hi] with f(lo), f(hi) of opposite sign
/// (a zero value at either end counts as converged). Stops when |f| <= ftol,
/// when hi - lo <= xtol, or when the midpoint is no longer representable
/// between the endpoints.
template <class F>
BisectionResult bisect(F&& f, double lo, double hi, double flo, double fhi,
                       double ftol, double xtol, std::size_t max_iter = 2000) {
    BisectionResult r{lo, hi, lo, flo, 0};
    if (std::abs(fhi) < std::abs(flo)) {
        r.root = hi;
        r.value = fhi;
    }
    if (std::abs(r.value) <= ftol) return r;
    const bool lo_negative = flo < 0.0;
    while (r.iterations < max_iter && (r.hi - r.lo) > xtol) {
        const double mid = r.lo + 0.5 * (r.hi - r.lo);
        if (mid <= r.lo || mid >= r.hi) break;
        const double fm = f(mid);
        ++r.iterations;
        if (std::abs(fm) < std::abs(r.value)) {
            r.root = mid;
            r.value = fm;
        }
        if (std::abs(fm) <= ftol) break;
        if ((fm < 0.0) == lo_negative)
            r.lo = mid;
        else
            r.hi = mid;
    }
    return r;
}

struct Extremum {
    double x;
    double value;
};

/// Golden-section maximisation of a unimodal f on [a, b].
template <class F>
Extremum golden_argmax(F&& f, double a, double b, double tol = 1e-13) {
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol * (1.0 + std::abs(a) + std::abs(b))) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc > fd ? Extremum{c, fc} : Extremum{d, fd};
}

template <class F>
double golden_max(F&& f, double a, double b, double tol = 1e-13) {
    return golden_argmax(std::forward<F>(f), a, b, tol).value;
}

}  // namespace radial
