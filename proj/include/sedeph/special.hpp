// special.hpp - Hyperbolic sine integral

#pragma once

namespace sedeph {

// Shi(x) = integral_0^x sinh(u)/u du for x >= 0. Relative error below 1e-10.
// Overflows to +inf beyond x ~ 716; use log_shi there. Throws DomainError for
// negative or non-finite x.
double shi(double x);

// log(Shi(x)) for x > 0, finite for arbitrarily large x. Returns -inf at 0.
double log_shi(double x);

} // namespace sedeph
