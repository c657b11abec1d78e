#pragma once

#include <complex>
#include <stdexcept>

namespace qpwalk {

using cplx = std::complex<double>;

// Coefficients of the kernel polynomial Q(x,y,z) = a(x,z) y^2 + b(x,z) y + c(x,z),
// for the six-step walk with jumps (1,0),(1,-1),(0,-1),(-1,0),(-1,1),(0,1), each 1/6.
// Q is symmetric in x and y, so the same functions serve for the x-quadratic.
inline cplx kernel_a(cplx x, cplx z) { return z * (x + 1.0) / 6.0; }
inline cplx kernel_b(cplx x, cplx z) { return z * x * x / 6.0 - x + z / 6.0; }
inline cplx kernel_c(cplx x, cplx z) { return z * x * (x + 1.0) / 6.0; }

inline cplx kernel_Q(cplx x, cplx y, cplx z) {
    return kernel_a(x, z) * y * y + kernel_b(x, z) * y + kernel_c(x, z);
}

/// Discriminant d(x,z) = b^2 - 4ac. Reciprocal in x: x^4 d(1/x,z) = d(x,z).
inline cplx kernel_d(cplx x, cplx z) {
    cplx b = kernel_b(x, z);
    return b * b - 4.0 * kernel_a(x, z) * kernel_c(x, z);
}

/// Roots x1 < x2 < x3 < x4 of d(.,z), z in (0,1]. x1*x4 = x2*x3 = 1.
struct BranchPoints {
    double z;
    double x1, x2, x3, x4;
};

BranchPoints branch_points(double z);

/// Algebraic branch Y_-(x,z) (branch 0) or Y_+(x,z) (branch 1) of Q(x,Y,z) = 0,
/// with the principal square root of d. Throws if a(x,z) = 0.
cplx Y_branch(cplx x, cplx z, int branch);

/// Both roots of Q(x,.,z) = 0, ordered by modulus (small first). Uses the
/// cancellation-free quadratic; switches to Vieta pairing near d = 0.
std::pair<cplx, cplx> Y_roots_ordered(cplx x, cplx z);

/// Chebyshev polynomial of the second kind, three-term recurrence.
cplx chebyshev_U(int n, cplx u);
double chebyshev_U(int n, double u);

// t2(u,z) parametrizes the slit [x1(z),x2(z)]: t2(-1,z) = x1, t2(1,z) = x2,
// and b(t2,z)/sqrt(4ac)(t2,z) = -u on [-1,1]. The other quartic roots are
// t1(u) = t2(-u), t3 = 1/t2, t4 = 1/t1.
//
// Evaluation runs in the variable zeta = sqrt(z) so that every square root
// below keeps a fixed branch on |z| <= 0.95: the radicands of
//   R = sqrt(6 + (2+u^2) zeta^2)   and   s = sqrt(1 - zeta^4/P^2)
// stay off the negative real axis there, and V = P(1+s) is nonvanishing,
// which makes t2 = zeta^2/V and sqrt_t2 = zeta/sqrt(V) single-valued.
struct SlitPoint {
    cplx t2;       // t2(u,z)
    cplx dt2;      // d t2 / du
    cplx sqrt_t2;  // square root of t2 consistent across the z-disc
    cplx big_t;    // the symmetric-function value T(u,z) = (t2 + 1/t2)/2
};

SlitPoint slit_point(double u, cplx zeta);

/// Quartic root t_index(u,z), index in 1..4; |z| <= 0.95 (complex) or z in (0,1].
cplx t_root(double u, cplx z, int index);

/// t2^(n2/2) using the branch-consistent square root from SlitPoint.
cplx pow_half(const SlitPoint& p, int n2);

}  // namespace qpwalk
