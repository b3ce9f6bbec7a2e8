// special.cpp - Shi(x) by power series (small x) or asymptotic series (large x)

#include "sedeph/special.hpp"

#include <cmath>
#include <limits>

#include "sedeph/errors.hpp"

namespace sedeph {

namespace {

// Series and asymptotic branches meet here. At x = 40 the smallest asymptotic
// term is ~7e-17 relative, and the all-positive power series has no
// cancellation.
constexpr double kSeriesLimit = 40.0;

double shi_series(double x) {
    const double x2 = x * x;
    double power = x; // x^(2k+1) / (2k+1)!
    double sum = x;
    for (int k = 1; k < 500; ++k) {
        power *= x2 / ((2.0 * k) * (2.0 * k + 1.0));
        const double term = power / (2.0 * k + 1.0);
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sum;
}

// sum_k k!/x^k, truncated before the terms start growing.
double asymptotic_sum(double x) {
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double next = term * k / x;
        if (next >= term) break;
        term = next;
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sum;
}

void check_domain(double x) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw DomainError("Shi requires a finite nonnegative argument");
    }
}

} // namespace

double shi(double x) {
    check_domain(x);
    if (x <= kSeriesLimit) return shi_series(x);
    return std::exp(log_shi(x));
}

double log_shi(double x) {
    check_domain(x);
    if (x == 0.0) return -std::numeric_limits<double>::infinity();
    if (x <= kSeriesLimit) return std::log(shi_series(x));
    return x - std::log(2.0 * x) + std::log(asymptotic_sum(x));
}

} // namespace sedeph
