#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>

#include "rfso/errors.hpp"

namespace rfso::specfun {

struct QuadOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_depth = 60;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;       // accumulated error estimate
    std::size_t evals = 0;
};

namespace detail {

// 15-point Kronrod / 7-point Gauss pair (QUADPACK dqk15 abscissae/weights).
inline constexpr double gk15_x[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double gk15_wk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double gk15_wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
inline void gk15(const F& f, double a, double b, double& result, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resg = gk15_wg[3] * fc;
    double resk = gk15_wk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * gk15_x[j];
        const double fsum = f(c - dx) + f(c + dx);
        resk += gk15_wk[j] * fsum;
        if (j % 2 == 1) resg += gk15_wg[j / 2] * fsum;
    }
    result = resk * h;
    err = std::abs((resk - resg) * h);
}

} // namespace detail

/// Adaptive Gauss-Kronrod integration of f over the finite interval [a, b].
template <typename F>
QuadResult integrate(const F& f, double a, double b, QuadOptions opts = {}) {
    struct Segment {
        double a, b, value, error;
        int depth;
    };
    QuadResult total;
    if (a == b) return total;

    double v0, e0;
    detail::gk15(f, a, b, v0, e0);
    total.evals = 15;

    // Worst-first refinement with a small explicit stack.
    Segment stack[256];
    int top = 0;
    stack[top++] = {a, b, v0, e0, 0};
    total.value = v0;
    total.error = e0;

    while (top > 0) {
        const double tol = std::max(opts.abs_tol, opts.rel_tol * std::abs(total.value));
        // find worst segment
        int worst = 0;
        for (int i = 1; i < top; ++i)
            if (stack[i].error > stack[worst].error) worst = i;
        if (total.error <= tol) break;
        Segment seg = stack[worst];
        stack[worst] = stack[--top];
        if (seg.depth >= opts.max_depth || top >= 254) {
            throw numerical_error("adaptive quadrature failed to converge: error "
                                  "estimate " + std::to_string(total.error) +
                                  " above tolerance " + std::to_string(tol));
        }
        const double mid = 0.5 * (seg.a + seg.b);
        double vl, el, vr, er;
        detail::gk15(f, seg.a, mid, vl, el);
        detail::gk15(f, mid, seg.b, vr, er);
        total.evals += 30;
        total.value += vl + vr - seg.value;
        total.error += el + er - seg.error;
        stack[top++] = {seg.a, mid, vl, el, seg.depth + 1};
        stack[top++] = {mid, seg.b, vr, er, seg.depth + 1};
    }
    return total;
}

/// Integral of f over [a, inf) via the substitution x = a + u/(1-u).
template <typename F>
QuadResult integrate_to_infinity(const F& f, double a, QuadOptions opts = {}) {
    auto g = [&f, a](double u) {
        const double om = 1.0 - u;
        const double x = a + u / om;
        const double jac = 1.0 / (om * om);
        const double v = f(x) * jac;
        return std::isfinite(v) ? v : 0.0;
    };
    return integrate(g, 0.0, 1.0, opts);
}

} // namespace rfso::specfun
