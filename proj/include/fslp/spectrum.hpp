#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fslp/decomposition.hpp"
#include "fslp/types.hpp"

namespace fslp {

// n-th interval where g < 0, in lambda and as its 2alpha-th root image.
struct EigenvalueBracket {
    int n;
    double lambda_lo;
    double lambda_hi;
    double rho_lo;
    double rho_hi;
};

struct Eigenvalue {
    double lambda;
    double residual;  // |char_fn(lambda)|
    int bracket;
};

struct SpectrumReport {
    FractionalOrder alpha;
    int n_star = 0;
    int eigen_count = 0;  // 2 * n_star
    std::optional<EigenvalueBracket> first_bracket;
    std::optional<EigenvalueBracket> last_bracket;
    std::vector<Eigenvalue> eigenvalues;  // filled when refinement requested
    int oracle_count = 0;                 // independent sign-scan root count
    bool oracle_agrees = false;
    std::vector<std::string> warnings;
};

EigenvalueBracket negative_interval(const DecompositionContext& ctx, int n);

// Smallest N with |g| < f at the odd extremum of g inside I_N; each I_n
// below it carries two eigenvalues, so the real spectrum has size 2N.
int find_n_star(const DecompositionContext& ctx);

std::vector<EigenvalueBracket> brackets(const DecompositionContext& ctx);

// Two roots of char_fn per bracket, refined to |dlambda| <= tol*(1+lambda),
// in increasing order. The interior odd extremum of g splits each bracket
// into one sign change on either side.
std::vector<Eigenvalue> refine_eigenvalues(
    const DecompositionContext& ctx,
    const std::vector<EigenvalueBracket>& brackets, double tol);

// Independent root-count oracle: sign changes of char_fn on a uniform grid
// in rho over (0, lambda_max^{1/(2alpha)}].
int sign_scan_count(const DecompositionContext& ctx, double lambda_max,
                    int samples_per_unit_rho = 64);

// Large-n eigenvalue location (n pi / sin(pi/2alpha))^{2alpha}.
double asymptotic_eigenvalue(FractionalOrder alpha, int n);

SpectrumReport spectrum_report(FractionalOrder alpha, double tol,
                               bool with_refinement,
                               const QuadratureConfig& quad_cfg = {},
                               int scan_samples_per_unit_rho = 64);

} // namespace fslp
