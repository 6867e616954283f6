#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fslp/decomposition.hpp"
#include "fslp/errors.hpp"
#include "fslp/solutions.hpp"
#include "fslp/specfun.hpp"

using namespace fslp;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
double rel(double got, double want) {
    return std::fabs(got - want) / std::fabs(want);
}
} // namespace

TEST_CASE("power pair values and domain") {
    const Interval I(0.0, 2.0);
    const SolutionPair p = fe1_fss(FractionalOrder(0.5), I, 1.0);
    CHECK(rel(p.y1, 0.564189583547756287) < 1e-10);
    CHECK(rel(p.y2, 1.12837916709551257) < 1e-10);

    const SolutionPair q = fe1_fss(FractionalOrder(1.0), I, 1.5);
    CHECK(q.y1 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(q.y2 == doctest::Approx(1.5).epsilon(1e-14));

    CHECK_THROWS_AS(fe1_fss(FractionalOrder(0.5), I, 0.0), domain_error);
    CHECK_THROWS_AS(fe1_fss(FractionalOrder(0.5), I, -0.5), domain_error);
    CHECK_THROWS_AS(fe1_fss(FractionalOrder(0.5), I, 2.5), domain_error);
}

TEST_CASE("Wronskian of the power pair") {
    const Interval I(0.0, 2.0);
    CHECK(rel(fe1_wronskian(FractionalOrder(0.5), I, 1.0),
              2.0 / kPi) < 1e-13);
    CHECK(fe1_wronskian(FractionalOrder(1.0), I, 0.3) ==
          doctest::Approx(1.0).epsilon(1e-14));
    // W scales as (t-a)^{2 alpha - 2}.
    const FractionalOrder a(0.7);
    const double w1 = fe1_wronskian(a, I, 0.5);
    const double w2 = fe1_wronskian(a, I, 2.0);
    CHECK(rel(w1 / w2, std::pow(0.25, -0.6)) < 1e-12);
    CHECK_THROWS_AS(fe1_wronskian(FractionalOrder(0.5), I, 0.0), domain_error);
}

TEST_CASE("psi vanishes at the left endpoint and hits the boundary limit") {
    CHECK(psi(FractionalOrder(0.6), Interval(0.0, 1.0), 0.0) == 0.0);
    CHECK(psi(FractionalOrder(0.95), Interval(-2.0, 3.0), -2.0) == 0.0);
    CHECK(rel(psi(FractionalOrder(0.6), Interval(0.0, 1.0), 1.0),
              2.2545946400721485011) < 1e-9);
    CHECK(rel(psi(FractionalOrder(0.8), Interval(0.0, 1.0), 1.0),
              1.2296213383242612697) < 1e-9);
    CHECK(rel(psi(FractionalOrder(0.95), Interval(0.0, 1.0), 1.0),
              1.0443794958501734911) < 1e-9);
}

TEST_CASE("psi interior values") {
    CHECK(rel(psi(FractionalOrder(0.6), Interval(0.0, 1.0), 0.5),
              0.58349251847796658498) < 1e-9);
    CHECK(rel(psi(FractionalOrder(0.75), Interval(1.0, 2.0), 1.5),
              0.578229309982714338) < 1e-9);
    CHECK(rel(psi(FractionalOrder(0.75), Interval(1.0, 2.0), 2.0),
              1.33187174200680105) < 1e-9);
}

TEST_CASE("psi at alpha = 1 is the linear ramp") {
    const Interval I(1.0, 4.0);
    for (double t : {1.0, 1.7, 3.2, 4.0})
        CHECK(psi(FractionalOrder(1.0), I, t) ==
              doctest::Approx(t - 1.0).epsilon(1e-13));
}

TEST_CASE("psi boundary limit needs alpha above one half") {
    const Interval I(0.0, 1.0);
    CHECK_THROWS_AS(psi(FractionalOrder(0.5), I, 1.0), domain_error);
    CHECK_NOTHROW(psi(FractionalOrder(0.5), I, 0.7));
    CHECK_THROWS_AS(psi(FractionalOrder(0.7), I, 1.5), domain_error);
    CHECK_THROWS_AS(psi(FractionalOrder(0.7), I, -0.1), domain_error);
}

TEST_CASE("two-point solution interpolates the boundary data") {
    const Fe2Solution sol(2.0, 5.0, FractionalOrder(0.75), Interval(1.0, 2.0));
    CHECK(fe2_general_solution(sol, 1.0) == 2.0);
    CHECK(fe2_general_solution(sol, 2.0) == 5.0);
    CHECK(rel(fe2_general_solution(sol, 1.5), 3.30244367774812737) < 1e-9);

    // Increasing data gives a monotone profile.
    double prev = fe2_general_solution(sol, 1.0);
    for (int i = 1; i <= 10; ++i) {
        const double t = 1.0 + 0.1 * i;
        const double y = fe2_general_solution(sol, t);
        CHECK(y >= prev);
        prev = y;
    }
    CHECK_THROWS_AS(Fe2Solution(0.0, 1.0, FractionalOrder(0.5),
                                Interval(0.0, 1.0)),
                    domain_error);
}

TEST_CASE("two-point solution becomes linear interpolation at alpha = 1") {
    const Fe2Solution sol(0.0, 1.0, FractionalOrder(1.0), Interval(0.0, 2.0));
    CHECK(fe2_general_solution(sol, 0.5) ==
          doctest::Approx(0.25).epsilon(1e-13));
    CHECK(fe2_general_solution(sol, 1.5) ==
          doctest::Approx(0.75).epsilon(1e-13));
}

TEST_CASE("eigenparameter pair reference values") {
    const SolutionPair p = fe3_fss(FractionalOrder(0.75), 5.0, 0.5);
    CHECK(rel(p.y1, -0.208011870110059692) < 1e-10);
    CHECK(rel(p.y2, 0.330662407206122195) < 1e-10);
}

TEST_CASE("eigenparameter pair degenerations") {
    // lambda = 0 collapses to the power pair.
    const SolutionPair z = fe3_fss(FractionalOrder(0.6), 0.0, 0.8);
    const SolutionPair w = fe1_fss(FractionalOrder(0.6), Interval(0.0, 1.0), 0.8);
    CHECK(rel(z.y1, w.y1) < 1e-13);
    CHECK(rel(z.y2, w.y2) < 1e-13);

    // alpha = 1 collapses to cosine and normalized sine.
    const double lam = 7.3;
    const double rt = std::sqrt(lam);
    for (double t : {0.0, 0.4, 1.0}) {
        const SolutionPair c = fe3_fss(FractionalOrder(1.0), lam, t);
        CHECK(std::fabs(c.y1 - std::cos(rt * t)) < 1e-12);
        CHECK(std::fabs(c.y2 - std::sin(rt * t) / rt) < 1e-12);
    }

    CHECK_THROWS_AS(fe3_fss(FractionalOrder(0.75), 5.0, -0.1), domain_error);
    CHECK_THROWS_AS(fe3_fss(FractionalOrder(0.75), 5.0, 0.0), domain_error);
}

TEST_CASE("eigenparameter pair near the classical limit") {
    const FractionalOrder a(1.0 - 1e-6);
    for (double lam : {1.0, 10.0}) {
        const double rt = std::sqrt(lam);
        for (double t : {0.2, 0.5, 0.9}) {
            const SolutionPair p = fe3_fss(a, lam, t);
            CHECK(std::fabs(p.y1 - std::cos(rt * t)) < 1e-3);
            CHECK(std::fabs(p.y2 - std::sin(rt * t) / rt) < 1e-3);
        }
    }
}

TEST_CASE("general combination of the eigenparameter pair") {
    const double lam = kPi * kPi;
    CHECK(std::fabs(fe3_general_solution(FractionalOrder(1.0), lam, 1.0, 1.0,
                                         1.0) -
                    (-1.0)) < 1e-10);
    // c1 = 0 stays regular down to t = 0.
    CHECK(fe3_general_solution(FractionalOrder(0.75), 5.0, 0.0, 2.0, 0.0) ==
          0.0);
    CHECK_THROWS_AS(
        fe3_general_solution(FractionalOrder(0.75), 5.0, 1.0, 0.0, 0.0),
        domain_error);
    const double y =
        fe3_general_solution(FractionalOrder(0.75), 5.0, 2.0, -1.0, 0.5);
    CHECK(rel(y, 2.0 * -0.208011870110059692 - 0.330662407206122195) < 1e-10);
}

TEST_CASE("boundary characteristic value") {
    CHECK(bc_value(FractionalOrder(0.75), 0.0) == 1.0);
    // Classical eigenvalues are its zeros at alpha = 1.
    for (int n = 1; n <= 3; ++n) {
        const double lam = n * n * kPi * kPi;
        CHECK(std::fabs(bc_value(FractionalOrder(1.0), lam)) < 1e-12);
    }
    CHECK(rel(bc_value(FractionalOrder(0.9), 5.0),
              ml(MLParams(1.8, 2.0), -5.0)) < 1e-12);
    CHECK_THROWS_AS(bc_value(FractionalOrder(0.5), 1.0), domain_error);
}

TEST_CASE("characteristic value: raw series against the split form") {
    for (double alpha : {0.75, 0.9}) {
        const DecompositionContext ctx{FractionalOrder(alpha)};
        for (double lam : {1.0, 5.0, 20.0, 60.0, 120.0, 200.0}) {
            const double series = ml_series(MLParams(2.0 * alpha, 2.0), -lam);
            const double rho = ctx.rho_of_lambda(lam);
            const double split =
                (f_of_rho(ctx, rho) + g_of_rho(ctx, rho)) / rho;
            CHECK(rel(series, split) < 1e-8);
        }
    }
    // The smallest admissible order reaches the cancellation ceiling around
    // lambda ~ 120; past that only the split form keeps full accuracy.
    const DecompositionContext ctx{FractionalOrder(0.6)};
    for (double lam : {1.0, 10.0, 40.0, 80.0, 120.0}) {
        const double series = ml_series(MLParams(1.2, 2.0), -lam);
        const double rho = ctx.rho_of_lambda(lam);
        const double split = (f_of_rho(ctx, rho) + g_of_rho(ctx, rho)) / rho;
        CHECK(rel(series, split) < 1e-8);
    }
}
