#pragma once

#include <array>
#include <vector>

#include "qpwalk/kernel.hpp"
#include "qpwalk/walk_dp.hpp"

namespace qpwalk {

/// Gauss-Chebyshev rule of the second kind on [-1,1] for the weight
/// sqrt(1-u^2): nodes cos(j pi/(n+1)), weights (pi/(n+1)) sin^2(j pi/(n+1)).
struct QuadratureRule {
    int order;
    std::vector<double> nodes, weights;
    explicit QuadratureRule(int n);
};

struct HEvaluation {
    cplx value{0.0, 0.0};
    double error_estimate = 0.0;
    bool converged = true;
};

/// The three pieces of h(x,z) = h1 + h2 + h3 for a start (x0,y0):
///   h1 = x^{x0} Y0(x,z)^{y0}          (Y0 = modulus-small branch)
///   h2 = (x/pi) int_{x1}^{x2} t^{x0-1}/(t-x) mu_{y0} (-d)^{1/2} dt
///   h3 = (1/pi) int_{x1}^{x2} t^{x0} [1/(t-q0) + 1/(t-q1) - 1/(t+1)] mu (-d)^{1/2} dt
/// with q_i = Y_i(x,z)/x the remaining solutions of w_z(u) = w_z(x).
/// Quadrature runs after the t = t2(u,z) substitution, whose weight is
/// exactly sqrt(1-u^2). For an odd rule order the error estimate comes from
/// the embedded half-order rule at no extra integrand cost.
std::array<HEvaluation, 3> h_parts(cplx x, cplx z, int x0, int y0,
                                   const QuadratureRule& rule);

/// h1+h2+h3 with order doubling until the relative change drops below 1e-12
/// (or the 4095-point rule is reached; then converged = false). h(0,z) = 0.
HEvaluation h_total(cplx x, cplx z, int x0, int y0);

/// h~(y,z; x0,y0) = h(y,z; y0,x0) by the x<->y symmetry of the kernel.
HEvaluation h_tilde_total(cplx y, cplx z, int x0, int y0);

/// Truncated interior generating function
/// sum_{k<=K} z^k sum_{i,j} P[(X(k),Y(k))=(i,j)] x^{i-1} y^{j-1}.
cplx G_truncated(cplx x, cplx y, cplx z, int x0, int y0, int K);

/// |Q G_K - h - h~ + x^{x0} y^{y0}|, which is bounded by the G-truncation
/// tail plus the quadrature error.
double functional_eq_residual(cplx x, cplx y, cplx z, int x0, int y0, int K);

/// Max over curve samples of |h(t,z) - h(conj t,z) - t^{x0} Y0(t,z)^{y0}
/// + conj(t)^{x0} Y0(conj t,z)^{y0}|; h on the curve is evaluated through the
/// site-resolved absorption series, which converges geometrically there.
double boundary_residual(double z, int x0, int y0, int samples, int K);

}  // namespace qpwalk
