#pragma once

#include "fslp/errors.hpp"
#include "fslp/quadrature.hpp"
#include "fslp/types.hpp"

namespace fslp {

// Gamma function. Relative error <= 1e-13 on x in [-50, 170]; poles raise
// domain_error, overflow (x > ~171.62) raises range_error.
double gamma(double x);

// 1/Gamma(x) with the entire-function convention: exactly 0 at x = 0, -1,
// -2, ... Large positive x underflows to 0; x < -170 overflows (range_error).
double reciprocal_gamma(double x);

// Parameters of the two-parameter Mittag-Leffler function
// E_{delta,theta}(z) = sum_k z^k / Gamma(delta k + theta).
struct MLParams {
    double delta;
    double theta;
    int series_terms_max = 400;
    int asymptotic_terms = 8;
    double switch_radius = 40.0; // |z| above which ml() uses the asymptotic branch

    MLParams(double delta_, double theta_) : delta(delta_), theta(theta_) {
        if (!(delta > 0.0 && delta <= 2.0))
            throw domain_error("mittag-leffler delta must lie in (0, 2]");
    }
    MLParams(double delta_, double theta_, int series_max, int asym_terms,
             double radius)
        : delta(delta_), theta(theta_), series_terms_max(series_max),
          asymptotic_terms(asym_terms), switch_radius(radius) {
        if (!(delta > 0.0 && delta <= 2.0))
            throw domain_error("mittag-leffler delta must lie in (0, 2]");
        if (series_terms_max < 1 || asymptotic_terms < 1 ||
            !(switch_radius > 0.0))
            throw domain_error("mittag-leffler parameters out of range");
    }
};

// Sector boundary angle mu for the asymptotic expansion; admissible range is
// (delta*pi/2, min(pi, delta*pi)), validated where it is used.
struct SectorAngle {
    double mu;
};

// Midpoint of the admissible mu interval for a given delta < 2.
SectorAngle default_sector(double delta);

enum class MLBranch { series, asymptotic, closed_form };

// Power series evaluation, summed in extended precision to absorb the
// alternating-term cancellation for z < 0. Terms whose Gamma argument hits a
// pole contribute exactly 0. Stops once a term falls below
// 1e-16 * (|sum| + 1); raises accuracy_error if series_terms_max is hit first.
double ml_series(const MLParams& p, double z);

// Truncated asymptotic expansion with N = p.asymptotic_terms:
//   z > 0: (1/delta) z^{(1-theta)/delta} exp(z^{1/delta}) - S_N(z)
//   z < 0: -S_N(z),   S_N(z) = sum_{k=1..N} z^{-k} / Gamma(theta - delta k).
// Reliable for delta <= 1.98; delta = 2 is answered by the exact closed forms
// (theta in {1, 2}); other delta near 2 raise domain_error because the
// dropped exponential term is not small on the negative axis.
double ml_asymptotic(const MLParams& p, SectorAngle mu, double z);

// E_{delta,theta}(z): closed form for delta = 2 with theta in {1, 2},
// otherwise series for |z| <= switch_radius and the asymptotic branch beyond.
double ml(const MLParams& p, double z);

// The branch ml() would take for these arguments.
MLBranch ml_branch(const MLParams& p, double z);

// Largest |z| for which the extended-precision series keeps roughly ten
// significant digits on the negative axis (cancellation grows like
// exp(|z|^{1/delta})). Useful as a switch_radius for callers that stay on
// the series as long as it is trustworthy.
double ml_series_safe_radius(double delta);

// Integral of (w-1)^(alpha-1) w^(alpha-1) from 1 to x (x >= 1), absolute
// error <= 1e-10. The endpoint singularity at w = 1 is removed exactly by
// the substitution w = 1 + u^{1/alpha}.
double psi_kernel_integral(FractionalOrder alpha, double x,
                           const QuadratureConfig& cfg = {});

} // namespace fslp
