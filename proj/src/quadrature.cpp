#include "fslp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <queue>
#include <vector>

#include "fslp/errors.hpp"

namespace fslp {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
// Even indices are Kronrod-only abscissae, odd indices are the Gauss points,
// index 7 is the midpoint.
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct Panel {
    double a;
    double b;
    double value;
    double error;
};

struct PanelWorse {
    bool operator()(const Panel& x, const Panel& y) const {
        return x.error < y.error;
    }
};

Panel evaluate_panel(const Integrand& f, double a, double b, long& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resg = kWg[3] * fc;
    double resk = kWgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double s = f(c - dx) + f(c + dx);
        resk += kWgk[j] * s;
        if (j % 2 == 1) resg += kWg[(j - 1) / 2] * s;
    }
    evals += 15;
    return Panel{a, b, resk * h, std::abs(resk - resg) * h};
}

QuadratureResult adapt(const Integrand& f, double a, double b,
                       const QuadratureConfig& cfg) {
    if (!(a < b)) throw domain_error("integrate_finite requires a < b");

    QuadratureResult res;
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> active;
    std::vector<Panel> frozen; // panels too narrow to split further

    Panel first = evaluate_panel(f, a, b, res.evaluations);
    double total_value = first.value;
    double total_error = first.error;
    active.push(first);

    const auto tolerance = [&] {
        return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total_value));
    };

    int splits = 0;
    while (total_error > tolerance() && !active.empty() &&
           splits < cfg.max_subdivisions) {
        Panel worst = active.top();
        active.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            frozen.push_back(worst); // interval at floating-point resolution
            continue;
        }
        ++splits;
        Panel left = evaluate_panel(f, worst.a, mid, res.evaluations);
        Panel right = evaluate_panel(f, mid, worst.b, res.evaluations);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        active.push(left);
        active.push(right);
    }

    // Deterministic final summation ordered by panel position.
    std::vector<Panel> panels = std::move(frozen);
    while (!active.empty()) {
        panels.push_back(active.top());
        active.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    double value = 0.0, error = 0.0, comp = 0.0;
    for (const Panel& p : panels) {
        const double y = p.value - comp;
        const double t = value + y;
        comp = (t - value) - y;
        value = t;
        error += p.error;
    }

    res.value = value;
    res.error_estimate = error;
    res.converged =
        error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
    return res;
}

} // namespace

QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureConfig& cfg) {
    return adapt(f, a, b, cfg);
}

QuadratureResult integrate_semi_infinite(const Integrand& f, double a,
                                         const QuadratureConfig& cfg) {
    const auto transformed = [&f, a](double u) {
        const double r = a + (1.0 - u) / u;
        const double fr = f(r);
        return fr == 0.0 ? 0.0 : fr / (u * u);
    };
    return adapt(transformed, 0.0, 1.0, cfg);
}

} // namespace fslp
