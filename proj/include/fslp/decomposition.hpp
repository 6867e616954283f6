#pragma once

#include "fslp/quadrature.hpp"
#include "fslp/types.hpp"

namespace fslp {

// Exact split rho * E_{2a,2}(-lambda) = f(rho) + g(rho) with rho = lambda^{1/(2a)}:
// f is a completely monotone Laplace-type integral of the positive kernel k,
// g is an exponentially damped oscillation whose zeros and extrema are known
// in closed form. Valid for alpha in (1/2, 1); alpha = 1 is admitted as the
// degenerate boundary case k = 0, f = 0, g = sin(rho).
class DecompositionContext {
public:
    explicit DecompositionContext(FractionalOrder alpha,
                                  QuadratureConfig quad_cfg = {});

    FractionalOrder order() const { return alpha_; }
    const QuadratureConfig& quad_config() const { return quad_cfg_; }

    double sin_mu() const { return sin_mu_; }
    double cos_mu() const { return cos_mu_; }
    double cot_mu() const { return cot_mu_; }
    double sin_2api() const { return sin_2api_; }
    double cos_2api() const { return cos_2api_; }
    double mu() const { return mu_; }

    // char_fn evaluates the power series for rho at or below this abscissa
    // and the f + g split above it.
    static constexpr double rho_switch = 40.0;

    double rho_of_lambda(double lambda) const;
    double lambda_of_rho(double rho) const;

private:
    FractionalOrder alpha_;
    QuadratureConfig quad_cfg_;
    double mu_;        // pi/(2 alpha)
    double sin_mu_;
    double cos_mu_;
    double cot_mu_;
    double sin_2api_;  // sin(2 alpha pi), negative on (1/2, 1)
    double cos_2api_;
};

double kernel_k(const DecompositionContext& ctx, double r);

double f_part(const DecompositionContext& ctx, double lambda);
double g_part(const DecompositionContext& ctx, double lambda);

// Same quantities parameterized by rho = lambda^{1/(2 alpha)}; the spectrum
// search works in rho where the oscillation of g has unit frequency.
double f_of_rho(const DecompositionContext& ctx, double rho);
double g_of_rho(const DecompositionContext& ctx, double rho);

// k-th positive zero of g as a lambda value, k >= -1.
double g_zeros(const DecompositionContext& ctx, int k);

struct GExtremum {
    double z;      // lambda location
    double value;  // g there; positive for even k, negative for odd k
};
GExtremum g_extremum(const DecompositionContext& ctx, int k);

// E_{2a,2}(-lambda): power series for small |lambda|, the f + g split
// (divided by rho) beyond it. Its positive zeros are the eigenvalues.
double char_fn(const DecompositionContext& ctx, double lambda);
double char_fn_of_rho(const DecompositionContext& ctx, double rho);

} // namespace fslp
