#include "fslp/decomposition.hpp"

#include <cmath>

#include "fslp/errors.hpp"
#include "fslp/specfun.hpp"

namespace fslp {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

} // namespace

DecompositionContext::DecompositionContext(FractionalOrder alpha,
                                           QuadratureConfig quad_cfg)
    : alpha_(alpha), quad_cfg_(quad_cfg) {
    const double a = alpha_.alpha;
    if (!(a > 0.5))
        throw domain_error("decomposition requires alpha > 1/2");
    mu_ = kPi / (2.0 * a);
    // mu = pi/2 + beta with beta = pi(1-a)/(2a); evaluating the shifted forms
    // keeps full relative accuracy as a -> 1 where the direct differences
    // mu - pi/2 and 2*a*pi - 2*pi would cancel.
    const double beta = kPi * (1.0 - a) / (2.0 * a);
    sin_mu_ = std::cos(beta);
    cos_mu_ = -std::sin(beta);
    cot_mu_ = cos_mu_ / sin_mu_;
    sin_2api_ = -std::sin(2.0 * kPi * (1.0 - a));
    cos_2api_ = std::cos(2.0 * kPi * (1.0 - a));
    if (!(sin_mu_ > 0.0) || cos_mu_ > 0.0 || sin_2api_ > 0.0)
        throw structural_error("decomposition constants out of range");
    if (a < 1.0 && (cos_mu_ >= 0.0 || sin_2api_ >= 0.0))
        throw structural_error("decomposition constants out of range");
}

double DecompositionContext::rho_of_lambda(double lambda) const {
    if (lambda < 0.0)
        throw domain_error("rho_of_lambda requires lambda >= 0");
    return std::pow(lambda, 0.5 / alpha_.alpha);
}

double DecompositionContext::lambda_of_rho(double rho) const {
    if (rho < 0.0) throw domain_error("lambda_of_rho requires rho >= 0");
    return std::pow(rho, 2.0 * alpha_.alpha);
}

double kernel_k(const DecompositionContext& ctx, double r) {
    if (!(r > 0.0)) throw domain_error("kernel_k requires r > 0");
    const double a = ctx.order().alpha;
    const double x = std::pow(r, 2.0 * a);
    const double denom = x * x + 2.0 * x * ctx.cos_2api() + 1.0;
    return (-ctx.sin_2api() / kPi) * std::pow(r, 2.0 * a - 2.0) / denom;
}

double f_of_rho(const DecompositionContext& ctx, double rho) {
    if (rho < 0.0) throw domain_error("f_of_rho requires rho >= 0");
    const double a = ctx.order().alpha;
    const double s2 = -ctx.sin_2api();
    if (s2 == 0.0) return 0.0;
    const double c = ctx.cos_2api();
    const double p = 2.0 * a - 1.0;

    // [0,1]: r = u^{1/p} absorbs the r^{2a-2} endpoint singularity exactly,
    // leaving e^{-rho r} / (r^{4a} + 2 r^{2a} cos(2api) + 1) against du.
    const double inv_p = 1.0 / p;
    const auto inner = [&](double u) {
        const double r = std::pow(u, inv_p);
        const double x = std::pow(r, 2.0 * a);
        const double e = std::exp(-rho * r);
        return e == 0.0 ? 0.0 : e / (x * x + 2.0 * x * c + 1.0);
    };
    const QuadratureResult q0 =
        integrate_finite(inner, 0.0, 1.0, ctx.quad_config());
    if (!q0.converged)
        throw accuracy_error("f_part: inner quadrature did not converge",
                             q0.error_estimate);

    // [1,inf): plain kernel times the damping; underflow of e^{-rho r} to
    // zero is the intended tail cutoff.
    const auto outer = [&](double r) {
        const double e = std::exp(-rho * r);
        return e == 0.0 ? 0.0 : e * kernel_k(ctx, r);
    };
    const QuadratureResult q1 =
        integrate_semi_infinite(outer, 1.0, ctx.quad_config());
    if (!q1.converged)
        throw accuracy_error("f_part: tail quadrature did not converge",
                             q1.error_estimate);

    return s2 / (kPi * p) * q0.value + q1.value;
}

double g_of_rho(const DecompositionContext& ctx, double rho) {
    const double a = ctx.order().alpha;
    const double damp = std::exp(rho * ctx.cos_mu());
    if (damp == 0.0) return 0.0;
    return damp * std::cos(rho * ctx.sin_mu() - ctx.mu()) / a;
}

double f_part(const DecompositionContext& ctx, double lambda) {
    if (lambda < 0.0) throw domain_error("f_part requires lambda >= 0");
    return f_of_rho(ctx, ctx.rho_of_lambda(lambda));
}

double g_part(const DecompositionContext& ctx, double lambda) {
    if (lambda < 0.0) throw domain_error("g_part requires lambda >= 0");
    return g_of_rho(ctx, ctx.rho_of_lambda(lambda));
}

double g_zeros(const DecompositionContext& ctx, int k) {
    if (k < -1) throw domain_error("g_zeros requires k >= -1");
    const double a = ctx.order().alpha;
    const double rho = (k + 0.5 + 0.5 / a) * kPi / ctx.sin_mu();
    return std::pow(rho, 2.0 * a);
}

GExtremum g_extremum(const DecompositionContext& ctx, int k) {
    if (k < 0) throw domain_error("g_extremum requires k >= 0");
    const double a = ctx.order().alpha;
    const double rho = (k + 0.5) * kPi / ctx.sin_mu();
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    GExtremum e;
    e.z = std::pow(rho, 2.0 * a);
    e.value = sign * std::exp((k + 0.5) * kPi * ctx.cot_mu()) *
              ctx.sin_mu() / a;
    return e;
}

double char_fn_of_rho(const DecompositionContext& ctx, double rho) {
    if (rho < 0.0) throw domain_error("char_fn_of_rho requires rho >= 0");
    if (rho > DecompositionContext::rho_switch)
        return (f_of_rho(ctx, rho) + g_of_rho(ctx, rho)) / rho;
    return char_fn(ctx, ctx.lambda_of_rho(rho));
}

double char_fn(const DecompositionContext& ctx, double lambda) {
    const double delta = 2.0 * ctx.order().alpha;
    const double lambda_switch =
        std::pow(DecompositionContext::rho_switch, delta);
    if (lambda > lambda_switch) {
        const double rho = ctx.rho_of_lambda(lambda);
        return (f_of_rho(ctx, rho) + g_of_rho(ctx, rho)) / rho;
    }
    MLParams params(delta, 2.0);
    // Keep the series as far out as it is trustworthy; the asymptotic branch
    // is then only reachable for very negative lambda, where z = -lambda is
    // large positive and the exponentially growing term dominates.
    params.switch_radius = ml_series_safe_radius(delta);
    return ml(params, -lambda);
}

} // namespace fslp
