#pragma once

#include "fslp/types.hpp"

namespace fslp {

struct SolutionPair {
    double y1;
    double y2;
};

// Boundary data for the two-point problem whose general solution is built
// from {1, psi}; the psi endpoint limit needs alpha > 1/2.
struct Fe2Solution {
    Fe2Solution(double y_a, double y_b, FractionalOrder alpha,
                Interval interval);

    double y_a;
    double y_b;
    FractionalOrder alpha;
    Interval interval;
};

// Power pair (t-a)^{alpha-1}/Gamma(alpha), (t-a)^alpha/Gamma(alpha+1).
SolutionPair fe1_fss(FractionalOrder alpha, Interval interval, double t);
double fe1_wronskian(FractionalOrder alpha, Interval interval, double t);

// psi(t; a, b, alpha): the companion solution to the constant, continuous on
// [a, b] with psi(a) = 0; the t = b value is the finite limit for
// alpha > 1/2 and diverges otherwise.
double psi(FractionalOrder alpha, Interval interval, double t);

double fe2_general_solution(const Fe2Solution& sol, double t);

// Mittag-Leffler pair t^{alpha-1} E_{2a,a}(-lambda t^{2a}),
// t^alpha E_{2a,a+1}(-lambda t^{2a}).
SolutionPair fe3_fss(FractionalOrder alpha, double lambda, double t);
double fe3_general_solution(FractionalOrder alpha, double lambda, double c1,
                            double c2, double t);

// Dirichlet characteristic value E_{2a,2}(-lambda) on [0,1]: zero exactly at
// the eigenvalues. Series for small lambda, f/g decomposition beyond.
double bc_value(FractionalOrder alpha, double lambda);

} // namespace fslp
