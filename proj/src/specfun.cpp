#include "fslp/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#if FSLP_HAVE_FLOAT128
#include <quadmath.h>
#endif

namespace fslp {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrtTwoPi = 2.506628274631000502415765284811045253;
constexpr double kGammaOverflowX = 171.62437695630272;

// Lanczos approximation, g = 607/128, 15 coefficients.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

// sin(pi x) with exact integer range reduction, accurate for large |x|.
double sin_pi(double x) {
    const double n = std::nearbyint(x);
    const double r = x - n; // exact, |r| <= 0.5
    const double s = std::sin(kPi * r);
    return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

bool is_nonpositive_integer(double x, double* nearest) {
    const double n = std::nearbyint(x);
    *nearest = n;
    if (n > 0.5) return false;
    const double tol =
        4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x));
    return std::abs(x - n) <= tol;
}

double lanczos_sum(double x) {
    double s = kLanczos[0];
    for (int i = 1; i < 15; ++i) s += kLanczos[i] / (x - 1.0 + i);
    return s;
}

// Gamma(x) for x >= 0.5. The power and exponential are split in half so no
// intermediate overflows before the final product does.
double gamma_positive(double x) {
    const double t = x + (kLanczosG - 0.5);
    const double q = std::pow(t, 0.5 * (x - 0.5)) * std::exp(-0.5 * t);
    return kSqrtTwoPi * lanczos_sum(x) * q * q;
}

double log_gamma_positive(double x) {
    const double t = x + (kLanczosG - 0.5);
    return std::log(kSqrtTwoPi * lanczos_sum(x)) + (x - 0.5) * std::log(t) - t;
}

#if FSLP_HAVE_FLOAT128
using wide_real = __float128;
wide_real wide_tgamma(wide_real x) { return tgammaq(x); }
double wide_abs(wide_real x) { return static_cast<double>(fabsq(x)); }
#else
using wide_real = long double;
wide_real wide_tgamma(wide_real x) { return tgammal(x); }
double wide_abs(wide_real x) { return static_cast<double>(fabsl(x)); }
#endif

// Closed forms at delta = 2: E_{2,1}(z) and E_{2,2}(z).
double ml2_closed(double theta, double z) {
    const double s = std::sqrt(std::abs(z));
    if (theta == 1.0) return z >= 0.0 ? std::cosh(s) : std::cos(s);
    if (std::abs(z) < 1e-8) return 1.0 + z / 6.0; // sinh(s)/s near 0
    return z >= 0.0 ? std::sinh(s) / s : std::sin(s) / s;
}

} // namespace

double gamma(double x) {
    double pole;
    if (is_nonpositive_integer(x, &pole))
        throw domain_error("gamma: pole at x = " + std::to_string(pole));
    if (x >= 0.5) {
        if (x > kGammaOverflowX)
            throw range_error("gamma: overflow for x = " + std::to_string(x));
        return gamma_positive(x);
    }
    // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)).
    if (1.0 - x > kGammaOverflowX) {
        // |Gamma(x)| is below double range; recover it in log space so the
        // result underflows gracefully instead of tripping on Gamma(1 - x).
        const double s = sin_pi(x);
        const double lg =
            std::log(kPi / std::abs(s)) - log_gamma_positive(1.0 - x);
        return std::copysign(std::exp(lg), s);
    }
    return kPi / (sin_pi(x) * gamma_positive(1.0 - x));
}

double reciprocal_gamma(double x) {
    double pole;
    if (is_nonpositive_integer(x, &pole)) return 0.0;
    if (x >= 0.5) {
        if (x <= kGammaOverflowX) return 1.0 / gamma_positive(x);
        return std::exp(-log_gamma_positive(x)); // underflows to 0 eventually
    }
    if (1.0 - x > kGammaOverflowX)
        throw range_error("reciprocal_gamma: overflow for x = " +
                          std::to_string(x));
    return sin_pi(x) * gamma_positive(1.0 - x) / kPi;
}

SectorAngle default_sector(double delta) {
    if (!(delta > 0.0 && delta < 2.0))
        throw domain_error("default_sector requires delta in (0, 2)");
    const double lo = delta * kPi / 2.0;
    const double hi = std::min(kPi, delta * kPi);
    return SectorAngle{0.5 * (lo + hi)};
}

double ml_series(const MLParams& p, double z) {
    wide_real sum = 0.0;
    wide_real zk = 1.0; // z^k
    double term_mag = 0.0;
    for (int k = 0; k < p.series_terms_max; ++k) {
        const double arg = p.delta * k + p.theta;
        double pole;
        const bool structural_zero = is_nonpositive_integer(arg, &pole);
        if (!structural_zero) {
            // Form the argument in the wide type: the double-rounded
            // delta*k + theta perturbs Gamma by ~arg*log(arg)*eps relative,
            // which the huge alternating terms amplify far above the final
            // sum's magnitude.
            const wide_real arg_w = static_cast<wide_real>(p.delta) * k +
                                    static_cast<wide_real>(p.theta);
            const wide_real g = wide_tgamma(arg_w);
            const wide_real term = zk / g;
            sum += term;
            term_mag = wide_abs(term);
        }
        zk *= static_cast<wide_real>(z);
        // Pole-killed terms are structural zeros, not evidence of convergence.
        if (!structural_zero && term_mag < 1e-16 * (wide_abs(sum) + 1.0))
            return static_cast<double>(sum);
    }
    throw accuracy_error(
        "ml_series: no convergence within " +
            std::to_string(p.series_terms_max) + " terms for z = " +
            std::to_string(z),
        term_mag);
}

double ml_asymptotic(const MLParams& p, SectorAngle mu, double z) {
    if (p.delta == 2.0 && (p.theta == 1.0 || p.theta == 2.0))
        return ml2_closed(p.theta, z);
    if (!(p.delta > 0.0 && p.delta <= 1.98))
        throw domain_error(
            "ml_asymptotic: requires delta in (0, 1.98] (or exactly 2 with "
            "theta in {1, 2}); the dropped term is O(1) otherwise");
    const double mu_lo = p.delta * kPi / 2.0;
    const double mu_hi = std::min(kPi, p.delta * kPi);
    if (!(mu.mu > mu_lo && mu.mu < mu_hi))
        throw domain_error("ml_asymptotic: sector angle outside admissible range");
    if (z == 0.0)
        throw domain_error("ml_asymptotic: undefined at z = 0");

    double s = 0.0;
    double zinv = 1.0;
    for (int k = 1; k <= p.asymptotic_terms; ++k) {
        zinv /= z;
        s += zinv * reciprocal_gamma(p.theta - p.delta * k);
    }
    if (z < 0.0) return -s;
    const double root = std::pow(z, 1.0 / p.delta);
    return std::pow(z, (1.0 - p.theta) / p.delta) * std::exp(root) / p.delta - s;
}

MLBranch ml_branch(const MLParams& p, double z) {
    if (p.delta == 2.0 && (p.theta == 1.0 || p.theta == 2.0))
        return MLBranch::closed_form;
    if (std::abs(z) <= p.switch_radius) return MLBranch::series;
    return MLBranch::asymptotic;
}

double ml(const MLParams& p, double z) {
    switch (ml_branch(p, z)) {
    case MLBranch::closed_form:
        return ml2_closed(p.theta, z);
    case MLBranch::series:
        return ml_series(p, z);
    case MLBranch::asymptotic:
    default:
        return ml_asymptotic(p, default_sector(p.delta), z);
    }
}

double ml_series_safe_radius(double delta) {
#if FSLP_HAVE_FLOAT128
    constexpr double rho_max = 45.0; // exp(45) * 2^-112 ~ 7e-15 absolute
#else
    constexpr double rho_max = 30.0; // long double fallback, exp(30) * 2^-63
#endif
    return std::pow(rho_max, delta);
}

double psi_kernel_integral(FractionalOrder alpha, double x,
                           const QuadratureConfig& cfg) {
    const double a = alpha.alpha;
    if (!(x >= 1.0))
        throw domain_error("psi_kernel_integral requires x >= 1");
    if (x == 1.0) return 0.0;
    if (a == 1.0) return x - 1.0;

    // w = 1 + u^{1/alpha} turns the integral into
    // (1/alpha) * int_0^{(x-1)^alpha} (1 + u^{1/alpha})^{alpha-1} du.
    const double inv_a = 1.0 / a;
    const double upper = std::pow(x - 1.0, a);
    QuadratureConfig qc = cfg;
    qc.abs_tol = std::min(qc.abs_tol, 5e-12);
    qc.rel_tol = std::min(qc.rel_tol, 1e-12);
    const auto g = [a, inv_a](double u) {
        return inv_a * std::pow(1.0 + std::pow(u, inv_a), a - 1.0);
    };
    const QuadratureResult r = integrate_finite(g, 0.0, upper, qc);
    if (!r.converged)
        throw accuracy_error("psi_kernel_integral: quadrature did not converge",
                             r.error_estimate);
    return r.value;
}

} // namespace fslp
