#pragma once

#include <string>

#include "fslp/errors.hpp"

namespace fslp {

// Fractional differentiation/integration order restricted to (0, 1].
// alpha = 1 is admitted so the classical limits stay testable; routines
// with a narrower domain (the spectrum needs alpha > 1/2 strictly below 1)
// revalidate on entry.
struct FractionalOrder {
    double alpha;

    explicit FractionalOrder(double a) : alpha(a) {
        if (!(a > 0.0 && a <= 1.0))
            throw domain_error("fractional order must lie in (0, 1], got " +
                               std::to_string(a));
    }
};

// Closed interval [a, b] with a < b.
struct Interval {
    double a;
    double b;

    Interval(double a_, double b_) : a(a_), b(b_) {
        if (!(a < b))
            throw domain_error("interval requires a < b");
    }
};

} // namespace fslp
