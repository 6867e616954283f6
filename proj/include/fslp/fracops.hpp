#pragma once

#include <vector>

#include "fslp/quadrature.hpp"
#include "fslp/types.hpp"

namespace fslp {

// Finite generalized power series sum_k coeff[k] * (t - origin)^(base + k*step)
// with base > -1 (every term left-integrable at the origin) and step > 0.
// An empty coefficient list is the zero series. This family is closed under
// the fractional power rules, which makes operator verification exact at the
// coefficient level.
struct GenPowerSeries {
    double base = 0.0;
    double step = 1.0;
    double origin = 0.0;
    std::vector<double> coeff;

    double eval(double t) const;

    // Strips leading exact-zero coefficients, advancing base accordingly.
    GenPowerSeries normalized() const;

    bool is_zero() const;
};

// Left Riemann-Liouville integral of order alpha, termwise:
// exponent p goes to p + alpha, coefficient gains Gamma(p+1)/Gamma(p+1+alpha).
GenPowerSeries rl_integral_series(const GenPowerSeries& s, FractionalOrder alpha);

// Left Riemann-Liouville derivative of order alpha, termwise:
// exponent p goes to p - alpha, coefficient gains Gamma(p+1)/Gamma(p+1-alpha);
// terms whose factor hits a pole of Gamma vanish exactly. A surviving term
// with exponent <= -1 makes the result non-integrable: domain_error.
GenPowerSeries rl_derivative_series(const GenPowerSeries& s, FractionalOrder alpha);

// Left Caputo derivative of order alpha: classical termwise derivative
// followed by the Riemann-Liouville integral of order 1 - alpha. Requires
// base >= 0; constants map to the zero series.
GenPowerSeries caputo_derivative_series(const GenPowerSeries& s,
                                        FractionalOrder alpha);

// (1/Gamma(alpha)) * int_a^t f(s) (t-s)^(alpha-1) ds for an arbitrary
// integrand, with the endpoint singularity removed exactly by s = t - u^(1/alpha).
double rl_integral_numeric(const Integrand& f, FractionalOrder alpha, double a,
                           double t, const QuadratureConfig& cfg = {});

enum class MLSolution { y1, y2 };

// Truncated series (K coefficients) of the eigenpair solutions
//   y1(t) = t^(alpha-1) E_{2alpha,alpha}(-lambda t^(2alpha)),
//   y2(t) = t^alpha     E_{2alpha,alpha+1}(-lambda t^(2alpha)).
GenPowerSeries ml_solution_as_series(FractionalOrder alpha, double lambda,
                                     MLSolution which, int K);

} // namespace fslp
