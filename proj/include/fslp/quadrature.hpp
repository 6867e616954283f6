#pragma once

#include <functional>

namespace fslp {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000; // panel bisections before giving up
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

using Integrand = std::function<double(double)>;

// Globally adaptive Gauss-Kronrod (7-15) integration of f over [a, b].
// Bisects the panel with the largest error estimate until the summed
// estimate drops below max(abs_tol, rel_tol * |value|). Integrable endpoint
// singularities are handled by the adaptivity; the rule never evaluates f
// at a or b. A non-converged result is flagged, never silently returned.
QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureConfig& cfg = {});

// Integral of f over [a, inf). The interval is mapped to (0, 1] by
// u = 1/(1 + r - a) and integrated adaptively, so the whole tail is inside
// the error estimate; f must decay at infinity for the transform to stay
// integrable. Exponential tails that underflow to zero are integrated as 0.
QuadratureResult integrate_semi_infinite(const Integrand& f, double a,
                                         const QuadratureConfig& cfg = {});

} // namespace fslp
