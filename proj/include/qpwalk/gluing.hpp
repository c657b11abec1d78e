#pragma once

#include <vector>

#include "qpwalk/kernel.hpp"

namespace qpwalk {

/// Conformal gluing function for the curve M_z:
///   w_z(t) = t(1+t) / ((t - x2(z)) (t - sqrt(x3(z)))^2).
/// Identifies conjugate points of the curve: w_z(X0(y,z)) = w_z(X1(y,z)).
cplx cgf(cplx t, double z);

/// mu_{y0}(t,z) = (2a)^{-y0} sum over odd j of C(y0,j) d^{(j-1)/2}... the finite
/// binomial sum carrying the jump of Y0^{y0} across the slit:
/// boundary value from above V satisfies V^{y0} - conj(V)^{y0} = -2i(-d)^{1/2} mu.
cplx mu(cplx t, cplx z, int y0);

/// Boundary values of the two Y-roots on the open slit (x1(z), x2(z)):
/// returns the value with positive imaginary part; its conjugate is the mate.
cplx slit_edge_value(double u, double z);

/// Curve sample of M_z: n Chebyshev-distributed abscissae on [x1,x2] and the
/// corresponding edge values (taken with Im >= 0); conjugates give the other edge.
struct CurveSample {
    double z;
    std::vector<double> abscissae;
    std::vector<cplx> points;
};

CurveSample curve_sample(double z, int n);

/// Exact verification, in rational arithmetic, that xi(x,y) = (x, x/y) and
/// eta(x,y) = (y/x, y) are involutions and (xi o eta)^3 is the identity.
bool group_order_check(int samples);

}  // namespace qpwalk
