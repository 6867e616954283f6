#include "fslp/spectrum.hpp"

#include <cmath>
#include <cstdio>

#include "fslp/errors.hpp"

namespace fslp {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTieTol = 1e-12;
constexpr int kLinearScanLimit = 256;
constexpr int kNStarLimit = 1 << 26;

void require_spectrum_order(const DecompositionContext& ctx) {
    const double a = ctx.order().alpha;
    if (!(a > 0.5 + 1e-9) || !(a < 1.0 - 1e-12))
        throw domain_error("spectrum operations require alpha in (1/2, 1)");
}

double odd_extremum_rho(const DecompositionContext& ctx, int n) {
    return (2.0 * n + 1.5) * kPi / ctx.sin_mu();
}

// Strict dominance f > |g| at the odd extremum inside I_n. Ties within
// kTieTol count as failures so the interval stays in the spectrum.
bool dominance_holds(const DecompositionContext& ctx, int n, bool* tie) {
    const GExtremum e = g_extremum(ctx, 2 * n + 1);
    const double f = f_of_rho(ctx, odd_extremum_rho(ctx, n));
    const double diff = f - std::fabs(e.value);
    if (std::fabs(diff) <= kTieTol) {
        if (tie) *tie = true;
        return false;
    }
    return diff > 0.0;
}

int find_n_star_impl(const DecompositionContext& ctx,
                     std::vector<std::string>* warnings) {
    require_spectrum_order(ctx);
    bool tie = false;
    int n_star = -1;
    for (int n = 0; n <= kLinearScanLimit; ++n) {
        if (dominance_holds(ctx, n, &tie)) {
            n_star = n;
            break;
        }
    }
    if (n_star < 0) {
        // f decays polynomially against g's geometric envelope, so dominance
        // is monotone at this depth: bracket by doubling, then bisect.
        int lo = kLinearScanLimit + 1;
        int hi = 2 * lo;
        while (!dominance_holds(ctx, hi, &tie)) {
            lo = hi + 1;
            hi *= 2;
            if (hi > kNStarLimit)
                throw structural_error(
                    "find_n_star: no dominance up to n = 2^26");
        }
        while (lo < hi) {
            const int mid = lo + (hi - lo) / 2;
            if (dominance_holds(ctx, mid, &tie))
                hi = mid;
            else
                lo = mid + 1;
        }
        n_star = lo;
    }
    if (tie && warnings)
        warnings->push_back(
            "n_star: dominance tie within 1e-12 resolved toward inclusion");
    for (int i = 1; i <= 3; ++i) {
        if (!dominance_holds(ctx, n_star + i, nullptr)) {
            if (warnings) {
                char buf[96];
                std::snprintf(buf, sizeof buf,
                              "n_star: dominance does not persist at n = %d",
                              n_star + i);
                warnings->push_back(buf);
            }
        }
    }
    return n_star;
}

} // namespace

EigenvalueBracket negative_interval(const DecompositionContext& ctx, int n) {
    if (n < 0) throw domain_error("negative_interval requires n >= 0");
    const double a = ctx.order().alpha;
    EigenvalueBracket b;
    b.n = n;
    // Endpoint arithmetic mirrors g_zeros exactly so the lambda fields and
    // the zeros agree to the last bit.
    b.rho_lo = (2.0 * n + 0.5 + 0.5 / a) * kPi / ctx.sin_mu();
    b.rho_hi = (2.0 * n + 1.5 + 0.5 / a) * kPi / ctx.sin_mu();
    b.lambda_lo = std::pow(b.rho_lo, 2.0 * a);
    b.lambda_hi = std::pow(b.rho_hi, 2.0 * a);
    return b;
}

int find_n_star(const DecompositionContext& ctx) {
    return find_n_star_impl(ctx, nullptr);
}

std::vector<EigenvalueBracket> brackets(const DecompositionContext& ctx) {
    const int n_star = find_n_star(ctx);
    std::vector<EigenvalueBracket> out;
    out.reserve(static_cast<std::size_t>(n_star));
    for (int n = 0; n < n_star; ++n)
        out.push_back(negative_interval(ctx, n));
    return out;
}

namespace {

double bisect_in_rho(const DecompositionContext& ctx, double lo, double hi,
                     double s_lo, double tol) {
    const double a = ctx.order().alpha;
    for (int it = 0; it < 300; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double lambda_mid = ctx.lambda_of_rho(mid);
        const double dldr = 2.0 * a * lambda_mid / mid;
        if ((hi - lo) * dldr <= 0.5 * tol * (1.0 + lambda_mid)) break;
        const double s_mid = char_fn_of_rho(ctx, mid);
        if (s_mid == 0.0) return mid;
        if ((s_mid > 0.0) == (s_lo > 0.0)) {
            lo = mid;
            s_lo = s_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

std::vector<Eigenvalue> refine_eigenvalues(
    const DecompositionContext& ctx,
    const std::vector<EigenvalueBracket>& brackets, double tol) {
    require_spectrum_order(ctx);
    if (!(tol > 0.0))
        throw domain_error("refine_eigenvalues requires tol > 0");
    std::vector<Eigenvalue> out;
    out.reserve(2 * brackets.size());
    for (std::size_t i = 0; i < brackets.size(); ++i) {
        const EigenvalueBracket& b = brackets[i];
        const double rho_mid = odd_extremum_rho(ctx, b.n);
        const double s_lo = char_fn_of_rho(ctx, b.rho_lo);
        const double s_mid = char_fn_of_rho(ctx, rho_mid);
        const double s_hi = char_fn_of_rho(ctx, b.rho_hi);
        if (!(s_lo > 0.0) || !(s_mid < 0.0) || !(s_hi > 0.0)) {
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "refine: bracket n = %d lacks the sign pattern "
                          "+/-/+ (%.3e, %.3e, %.3e)",
                          b.n, s_lo, s_mid, s_hi);
            throw structural_error(buf);
        }
        for (int half = 0; half < 2; ++half) {
            const double rho =
                half == 0
                    ? bisect_in_rho(ctx, b.rho_lo, rho_mid, s_lo, tol)
                    : bisect_in_rho(ctx, rho_mid, b.rho_hi, s_mid, tol);
            Eigenvalue ev;
            ev.lambda = ctx.lambda_of_rho(rho);
            ev.residual = std::fabs(char_fn(ctx, ev.lambda));
            ev.bracket = static_cast<int>(i);
            out.push_back(ev);
        }
    }
    return out;
}

int sign_scan_count(const DecompositionContext& ctx, double lambda_max,
                    int samples_per_unit_rho) {
    if (!(lambda_max > 0.0))
        throw domain_error("sign_scan_count requires lambda_max > 0");
    if (samples_per_unit_rho < 1)
        throw domain_error("sign_scan_count requires at least one sample");
    const double rho_max = ctx.rho_of_lambda(lambda_max);
    const double h = 1.0 / samples_per_unit_rho;
    const double rho_sw = DecompositionContext::rho_switch;

    // f is strictly decreasing in rho, so between consecutive knots its
    // value is bracketed by the knot values; most samples resolve their
    // sign from that bracket plus the cheap g, and only the few near a
    // crossing fall back to a full evaluation.
    std::vector<double> knot_rho;
    std::vector<double> knot_f;
    if (rho_max > rho_sw) {
        double r = rho_sw;
        while (r < rho_max) {
            knot_rho.push_back(r);
            r *= 1.01;
        }
        knot_rho.push_back(r);
        knot_f.reserve(knot_rho.size());
        for (double kr : knot_rho) knot_f.push_back(f_of_rho(ctx, kr));
    }
    const double slack = 3e-10;  // quadrature tolerance margin on f knots

    int count = 0;
    int prev_sign = 0;
    std::size_t seg = 0;
    const long n_steps = static_cast<long>(std::floor(rho_max / h));
    for (long j = 1; j <= n_steps + 1; ++j) {
        const double rho = j <= n_steps ? j * h : rho_max;
        if (j > n_steps && n_steps * h >= rho_max) break;
        double value;
        if (rho <= rho_sw) {
            value = char_fn_of_rho(ctx, rho);
        } else {
            while (seg + 1 < knot_rho.size() && knot_rho[seg + 1] < rho) ++seg;
            const double g = g_of_rho(ctx, rho);
            if (g + knot_f[seg + 1] - slack > 0.0)
                value = 1.0;
            else if (g + knot_f[seg] + slack < 0.0)
                value = -1.0;
            else
                value = g + f_of_rho(ctx, rho);
        }
        const int sign = value > 0.0 ? 1 : (value < 0.0 ? -1 : 0);
        if (sign != 0) {
            if (prev_sign != 0 && sign != prev_sign) ++count;
            prev_sign = sign;
        }
    }
    return count;
}

double asymptotic_eigenvalue(FractionalOrder alpha, int n) {
    if (n < 1) throw domain_error("asymptotic_eigenvalue requires n >= 1");
    const double a = alpha.alpha;
    if (!(a > 0.5))
        throw domain_error("asymptotic_eigenvalue requires alpha > 1/2");
    const double sin_mu = std::cos(kPi * (1.0 - a) / (2.0 * a));
    return std::pow(n * kPi / sin_mu, 2.0 * a);
}

SpectrumReport spectrum_report(FractionalOrder alpha, double tol,
                               bool with_refinement,
                               const QuadratureConfig& quad_cfg,
                               int scan_samples_per_unit_rho) {
    const DecompositionContext ctx(alpha, quad_cfg);
    require_spectrum_order(ctx);
    if (!(tol > 0.0)) throw domain_error("spectrum_report requires tol > 0");
    SpectrumReport report{alpha, 0, 0, {}, {}, {}, 0, false, {}};
    report.n_star = find_n_star_impl(ctx, &report.warnings);
    report.eigen_count = 2 * report.n_star;
    if (report.n_star > 0) {
        report.first_bracket = negative_interval(ctx, 0);
        report.last_bracket = negative_interval(ctx, report.n_star - 1);
        if (with_refinement) {
            std::vector<EigenvalueBracket> bs;
            bs.reserve(static_cast<std::size_t>(report.n_star));
            for (int n = 0; n < report.n_star; ++n)
                bs.push_back(negative_interval(ctx, n));
            report.eigenvalues = refine_eigenvalues(ctx, bs, tol);
        }
    }
    const double scan_to =
        g_zeros(ctx, report.n_star > 0 ? 2 * report.n_star : 1);
    report.oracle_count =
        sign_scan_count(ctx, scan_to, scan_samples_per_unit_rho);
    report.oracle_agrees = report.oracle_count == report.eigen_count;
    return report;
}

} // namespace fslp
