// quadrature.cpp - Breakpoint helpers for oscillatory integrands

#include "sedeph/quadrature.hpp"

#include <numbers>

namespace sedeph::quad {

std::vector<double> oscillation_breaks(double a, double b, double tau) {
    std::vector<double> out{a};
    if (tau > 0.0) {
        const double period = std::numbers::pi / std::abs(tau);
        const auto first = static_cast<long long>(std::floor(a / period)) + 1;
        for (long long k = first;; ++k) {
            const double x = static_cast<double>(k) * period;
            if (x >= b) break;
            if (x > a) out.push_back(x);
        }
    }
    out.push_back(b);
    return out;
}

} // namespace sedeph::quad
