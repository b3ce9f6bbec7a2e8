// quadrature.hpp - Globally adaptive Gauss-Kronrod (G7/K15) integration

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <tuple>
#include <sstream>
#include <vector>

#include "sedeph/errors.hpp"

namespace sedeph::quad {

struct Options {
    double rel_tol{1e-10};
    double abs_tol{1e-14};
    std::size_t max_intervals{200000};
};

struct Result {
    double value{0.0};
    double error{0.0};
    // Integral of |f|, used by callers to judge cancellation.
    double abs_value{0.0};
    std::size_t evaluations{0};
};

namespace detail {

// Kronrod abscissae (descending), Kronrod weights, Gauss weights for the
// odd-indexed abscissae.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error, abs_value;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gk15(const F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    double absk = std::abs(fc) * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        kronrod += kWgk[j] * (f1 + f2);
        absk += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half), absk * std::abs(half)};
}

} // namespace detail

// Integrates f over consecutive intervals [breaks[i], breaks[i+1]]. Panels are
// refined by bisection, largest error first, until the summed error estimate
// drops below max(rel_tol * |I|, abs_tol). Throws QuadratureError otherwise.
template <class F>
Result integrate(const F& f, std::span<const double> breaks, const Options& opt = {}) {
    Result out;
    if (breaks.size() < 2) return out;

    std::vector<detail::Panel> heap;
    heap.reserve(breaks.size() + 64);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (breaks[i + 1] > breaks[i]) heap.push_back(detail::gk15(f, breaks[i], breaks[i + 1]));
    }
    std::make_heap(heap.begin(), heap.end());
    std::size_t evals = 15 * heap.size();

    auto totals = [&] {
        double v = 0.0, e = 0.0, av = 0.0;
        for (const auto& p : heap) {
            v += p.value;
            e += p.error;
            av += p.abs_value;
        }
        return std::tuple{v, e, av};
    };

    auto [value, error, abs_value] = totals();
    std::size_t since_resum = 0;
    while (!heap.empty()) {
        const double tol = std::max(opt.rel_tol * std::abs(value), opt.abs_tol);
        // Roundoff floor: no estimate can beat the accumulated rounding of |f|.
        const double floor = 50.0 * 2.2e-16 * abs_value;
        if (error <= std::max(tol, floor)) break;
        if (heap.size() >= opt.max_intervals) {
            std::ostringstream os;
            os << "quadrature did not converge: estimate " << value << " error " << error
               << " after " << heap.size() << " intervals";
            throw QuadratureError(os.str());
        }
        std::pop_heap(heap.begin(), heap.end());
        const detail::Panel worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            throw QuadratureError("quadrature interval underflow");
        }
        const detail::Panel left = detail::gk15(f, worst.a, mid);
        const detail::Panel right = detail::gk15(f, mid, worst.b);
        evals += 30;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        abs_value += left.abs_value + right.abs_value - worst.abs_value;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end());
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end());
        if (++since_resum == 256) {
            // Incremental updates drift; resum periodically.
            std::tie(value, error, abs_value) = totals();
            since_resum = 0;
        }
    }
    std::tie(value, error, abs_value) = totals();
    out.value = value;
    out.error = error;
    out.abs_value = abs_value;
    out.evaluations = evals;
    return out;
}

// Breakpoints a = x0 < x1 < ... < b containing every k*pi/tau inside (a, b).
std::vector<double> oscillation_breaks(double a, double b, double tau);

} // namespace sedeph::quad
