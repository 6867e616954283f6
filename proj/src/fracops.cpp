#include "fslp/fracops.hpp"

#include <cmath>
#include <string>

#include "fslp/errors.hpp"
#include "fslp/specfun.hpp"

namespace fslp {

namespace {

void require_series_domain(const GenPowerSeries& s) {
    if (!(s.base > -1.0))
        throw domain_error("generalized power series requires base > -1");
    if (!(s.step > 0.0))
        throw domain_error("generalized power series requires step > 0");
}

} // namespace

double GenPowerSeries::eval(double t) const {
    const double dt = t - origin;
    if (dt < 0.0)
        throw domain_error("series evaluated left of its origin");
    double sum = 0.0;
    for (std::size_t k = 0; k < coeff.size(); ++k) {
        const double e = base + static_cast<double>(k) * step;
        double p;
        if (dt == 0.0) {
            if (e < 0.0 && coeff[k] != 0.0)
                throw domain_error("series term singular at the origin");
            p = (e == 0.0) ? 1.0 : 0.0;
        } else {
            p = std::pow(dt, e);
        }
        sum += coeff[k] * p;
    }
    return sum;
}

GenPowerSeries GenPowerSeries::normalized() const {
    GenPowerSeries r = *this;
    std::size_t lead = 0;
    while (lead < r.coeff.size() && r.coeff[lead] == 0.0) ++lead;
    if (lead > 0) {
        r.coeff.erase(r.coeff.begin(),
                      r.coeff.begin() + static_cast<std::ptrdiff_t>(lead));
        r.base += static_cast<double>(lead) * r.step;
    }
    while (!r.coeff.empty() && r.coeff.back() == 0.0) r.coeff.pop_back();
    return r;
}

bool GenPowerSeries::is_zero() const {
    for (double c : coeff)
        if (c != 0.0) return false;
    return true;
}

GenPowerSeries rl_integral_series(const GenPowerSeries& s, FractionalOrder alpha) {
    require_series_domain(s);
    const double a = alpha.alpha;
    GenPowerSeries r;
    r.base = s.base + a;
    r.step = s.step;
    r.origin = s.origin;
    r.coeff.reserve(s.coeff.size());
    for (std::size_t k = 0; k < s.coeff.size(); ++k) {
        const double p = s.base + static_cast<double>(k) * s.step;
        r.coeff.push_back(s.coeff[k] * gamma(p + 1.0) *
                          reciprocal_gamma(p + 1.0 + a));
    }
    return r;
}

GenPowerSeries rl_derivative_series(const GenPowerSeries& s,
                                    FractionalOrder alpha) {
    require_series_domain(s);
    const double a = alpha.alpha;
    GenPowerSeries r;
    r.base = s.base - a;
    r.step = s.step;
    r.origin = s.origin;
    r.coeff.reserve(s.coeff.size());
    for (std::size_t k = 0; k < s.coeff.size(); ++k) {
        const double p = s.base + static_cast<double>(k) * s.step;
        const double c = s.coeff[k] * gamma(p + 1.0) *
                         reciprocal_gamma(p + 1.0 - a);
        if (c != 0.0 && p - a <= -1.0 + 1e-12)
            throw domain_error(
                "rl_derivative_series: non-integrable result exponent " +
                std::to_string(p - a));
        r.coeff.push_back(c);
    }
    return r.normalized();
}

GenPowerSeries caputo_derivative_series(const GenPowerSeries& s,
                                        FractionalOrder alpha) {
    require_series_domain(s);
    if (s.base < 0.0)
        throw domain_error("caputo_derivative_series requires base >= 0");
    GenPowerSeries d;
    d.base = s.base - 1.0;
    d.step = s.step;
    d.origin = s.origin;
    d.coeff.reserve(s.coeff.size());
    for (std::size_t k = 0; k < s.coeff.size(); ++k) {
        const double p = s.base + static_cast<double>(k) * s.step;
        d.coeff.push_back(s.coeff[k] * p);
    }
    d = d.normalized();
    if (d.is_zero()) return GenPowerSeries{0.0, s.step, s.origin, {}};
    if (alpha.alpha == 1.0) return d;
    return rl_integral_series(d, FractionalOrder{1.0 - alpha.alpha});
}

double rl_integral_numeric(const Integrand& f, FractionalOrder alpha, double a,
                           double t, const QuadratureConfig& cfg) {
    const double al = alpha.alpha;
    if (!(t > a))
        throw domain_error("rl_integral_numeric requires t > a");
    // u = (t - s)^alpha maps the weight to a constant:
    // (1/(alpha Gamma(alpha))) * int_0^{(t-a)^alpha} f(t - u^{1/alpha}) du.
    // Split at the midpoint so each piece has at most one awkward endpoint.
    // On [a, m] the kernel is smooth and any singularity of f sits at s = a,
    // which the open-node rule never evaluates.  On [m, t] the substitution
    // keeps s away from a, so rounding near the upper limit cannot push the
    // evaluation point onto a singularity of f.
    const double inv_a = 1.0 / al;
    const double m = 0.5 * (a + t);
    const auto left = [&f, t, al](double s) {
        return f(s) * std::pow(t - s, al - 1.0);
    };
    const auto right = [&f, t, inv_a](double u) {
        return f(t - std::pow(u, inv_a));
    };
    const QuadratureResult rl = integrate_finite(left, a, m, cfg);
    const QuadratureResult rr =
        integrate_finite(right, 0.0, std::pow(t - m, al), cfg);
    if (!rl.converged || !rr.converged)
        throw accuracy_error("rl_integral_numeric: quadrature did not converge",
                             rl.error_estimate + rr.error_estimate);
    return (rl.value + rr.value * inv_a) * reciprocal_gamma(al);
}

GenPowerSeries ml_solution_as_series(FractionalOrder alpha, double lambda,
                                     MLSolution which, int K) {
    if (K < 1)
        throw domain_error("ml_solution_as_series requires K >= 1");
    const double a = alpha.alpha;
    GenPowerSeries r;
    r.step = 2.0 * a;
    r.origin = 0.0;
    r.base = (which == MLSolution::y1) ? a - 1.0 : a;
    const double shift = (which == MLSolution::y1) ? a : a + 1.0;
    r.coeff.reserve(static_cast<std::size_t>(K));
    double mlk = 1.0; // (-lambda)^k
    for (int k = 0; k < K; ++k) {
        r.coeff.push_back(mlk * reciprocal_gamma(2.0 * a * k + shift));
        mlk *= -lambda;
    }
    return r;
}

} // namespace fslp
