#include "fslp/solutions.hpp"

#include <cmath>

#include "fslp/decomposition.hpp"
#include "fslp/errors.hpp"
#include "fslp/specfun.hpp"

namespace fslp {

Fe2Solution::Fe2Solution(double y_a_, double y_b_, FractionalOrder alpha_,
                         Interval interval_)
    : y_a(y_a_), y_b(y_b_), alpha(alpha_), interval(interval_) {
    if (!(alpha.alpha > 0.5))
        throw domain_error("two-point solution requires alpha > 1/2");
}

SolutionPair fe1_fss(FractionalOrder alpha, Interval interval, double t) {
    const double a = alpha.alpha;
    if (!(t > interval.a))
        throw domain_error("fe1_fss requires t > a");
    if (t > interval.b) throw domain_error("fe1_fss requires t <= b");
    const double dt = t - interval.a;
    SolutionPair p;
    p.y1 = std::pow(dt, a - 1.0) * reciprocal_gamma(a);
    p.y2 = std::pow(dt, a) * reciprocal_gamma(a + 1.0);
    return p;
}

double fe1_wronskian(FractionalOrder alpha, Interval interval, double t) {
    const double a = alpha.alpha;
    if (!(t > interval.a))
        throw domain_error("fe1_wronskian requires t > a");
    const double rg = reciprocal_gamma(a);
    return std::pow(t - interval.a, 2.0 * a - 2.0) * rg * rg / a;
}

double psi(FractionalOrder alpha, Interval interval, double t) {
    const double a = alpha.alpha;
    const double lo = interval.a;
    const double hi = interval.b;
    if (t < lo || t > hi) throw domain_error("psi requires a <= t <= b");
    if (t == lo) return 0.0;
    const double rg = reciprocal_gamma(a);
    if (t == hi) {
        if (a <= 0.5)
            throw domain_error("psi diverges at t = b for alpha <= 1/2");
        return std::pow(hi - lo, 2.0 * a - 1.0) / (2.0 * a - 1.0) * rg * rg;
    }
    const double x = (hi - lo) / (hi - t);
    return std::pow(hi - t, 2.0 * a - 1.0) * psi_kernel_integral(alpha, x) *
           rg * rg;
}

double fe2_general_solution(const Fe2Solution& sol, double t) {
    const double a = sol.alpha.alpha;
    const double lo = sol.interval.a;
    const double hi = sol.interval.b;
    if (t < lo || t > hi)
        throw domain_error("fe2_general_solution requires a <= t <= b");
    if (t == lo) return sol.y_a;
    if (t == hi) return sol.y_b;
    const double ratio = (hi - t) / (hi - lo);
    const double weight = (2.0 * a - 1.0) * std::pow(ratio, 2.0 * a - 1.0) *
                          psi_kernel_integral(sol.alpha, 1.0 / ratio);
    return sol.y_a + (sol.y_b - sol.y_a) * weight;
}

SolutionPair fe3_fss(FractionalOrder alpha, double lambda, double t) {
    const double a = alpha.alpha;
    if (t < 0.0) throw domain_error("fe3_fss requires t >= 0");
    if (t == 0.0) {
        if (a == 1.0) return {1.0, 0.0};
        throw domain_error("fe3_fss: y1 singular at t = 0 for alpha < 1");
    }
    const double delta = 2.0 * a;
    const double z = -lambda * std::pow(t, delta);
    MLParams p1(delta, a);
    MLParams p2(delta, a + 1.0);
    p1.switch_radius = ml_series_safe_radius(delta);
    p2.switch_radius = p1.switch_radius;
    SolutionPair p;
    p.y1 = std::pow(t, a - 1.0) * ml(p1, z);
    p.y2 = std::pow(t, a) * ml(p2, z);
    return p;
}

double fe3_general_solution(FractionalOrder alpha, double lambda, double c1,
                            double c2, double t) {
    if (c1 == 0.0) {
        if (t < 0.0) throw domain_error("fe3 solutions require t >= 0");
        if (t == 0.0) return 0.0;
        const double a = alpha.alpha;
        const double delta = 2.0 * a;
        MLParams p2(delta, a + 1.0);
        p2.switch_radius = ml_series_safe_radius(delta);
        return c2 * std::pow(t, a) * ml(p2, -lambda * std::pow(t, delta));
    }
    const SolutionPair p = fe3_fss(alpha, lambda, t);
    return c1 * p.y1 + c2 * p.y2;
}

double bc_value(FractionalOrder alpha, double lambda) {
    if (!(alpha.alpha > 0.5))
        throw domain_error("bc_value requires alpha > 1/2");
    const DecompositionContext ctx(alpha);
    return char_fn(ctx, lambda);
}

} // namespace fslp
