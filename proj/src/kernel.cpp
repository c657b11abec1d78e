#include "qpwalk/kernel.hpp"

#include <cmath>

namespace qpwalk {

BranchPoints branch_points(double z) {
    if (!(z > 0.0 && z <= 1.0))
        throw std::domain_error("branch_points: z must lie in (0,1]");
    // d/x^2 is quadratic in x + 1/x with roots 2(s1 +- s2); the reciprocal
    // pairs then split as x = s +- sqrt(s^2 - 1). The minus branch yields the
    // two roots in (0,1), which pins x1(1) = 7 - 4 sqrt(3) and x1 x4 = 1.
    const double s1 = 3.0 / z + 1.0;
    const double s2 = std::sqrt(6.0 / z + 3.0);
    const double p = s1 + s2;
    const double m = s1 - s2;
    BranchPoints bp;
    bp.z = z;
    bp.x1 = p - std::sqrt(p * p - 1.0);
    bp.x2 = m - std::sqrt(m * m - 1.0);
    bp.x3 = 1.0 / bp.x2;
    bp.x4 = 1.0 / bp.x1;
    return bp;
}

cplx Y_branch(cplx x, cplx z, int branch) {
    const cplx a = kernel_a(x, z);
    if (std::abs(a) == 0.0)
        throw std::domain_error("Y_branch: a(x,z) = 0 (pole of the branch)");
    const cplx b = kernel_b(x, z);
    const cplx c = kernel_c(x, z);
    const cplx d = b * b - 4.0 * a * c;
    if (std::abs(d) < 1e-14 * std::norm(b)) {
        // near-degenerate discriminant: sum/product forms avoid cancellation
        const cplx s = std::sqrt(d);
        const cplx r0 = (-b - s) / (2.0 * a);
        return branch == 0 ? r0 : c / (a * r0);
    }
    const cplx s = std::sqrt(d);
    return branch == 0 ? (-b - s) / (2.0 * a) : (-b + s) / (2.0 * a);
}

std::pair<cplx, cplx> Y_roots_ordered(cplx x, cplx z) {
    const cplx a = kernel_a(x, z);
    if (std::abs(a) == 0.0)
        throw std::domain_error("Y_roots_ordered: a(x,z) = 0");
    const cplx b = kernel_b(x, z);
    const cplx c = kernel_c(x, z);
    const cplx s = std::sqrt(b * b - 4.0 * a * c);
    // pick the subtraction-free numerator, recover the mate from the product
    const cplx q = (std::real(std::conj(b) * s) >= 0.0) ? -(b + s) * 0.5 : (s - b) * 0.5;
    cplx r1, r2;
    if (std::abs(q) == 0.0) {
        r1 = r2 = -b / (2.0 * a);
    } else {
        r1 = q / a;
        r2 = c / q;
    }
    return std::abs(r1) <= std::abs(r2) ? std::make_pair(r1, r2)
                                        : std::make_pair(r2, r1);
}

cplx chebyshev_U(int n, cplx u) {
    if (n < 0) throw std::domain_error("chebyshev_U: negative order");
    if (n == 0) return 1.0;
    cplx um1 = 1.0, uc = 2.0 * u;
    for (int i = 1; i < n; ++i) {
        cplx un = 2.0 * u * uc - um1;
        um1 = uc;
        uc = un;
    }
    return uc;
}

double chebyshev_U(int n, double u) {
    if (n < 0) throw std::domain_error("chebyshev_U: negative order");
    if (n == 0) return 1.0;
    double um1 = 1.0, uc = 2.0 * u;
    for (int i = 1; i < n; ++i) {
        double un = 2.0 * u * uc - um1;
        um1 = uc;
        uc = un;
    }
    return uc;
}

SlitPoint slit_point(double u, cplx zeta) {
    const cplx z2 = zeta * zeta;
    const cplx R = std::sqrt(6.0 + (2.0 + u * u) * z2);
    const cplx P = 3.0 + u * u * z2 - u * zeta * R;   // = zeta^2 T(u,z)
    const cplx T = P / z2;
    const cplx s = std::sqrt(1.0 - (z2 * z2) / (P * P));
    const cplx V = P * (1.0 + s);                     // = zeta^2 (T + sqrt(T^2-1))
    SlitPoint out;
    out.t2 = z2 / V;
    out.sqrt_t2 = zeta / std::sqrt(V);
    out.big_t = T;
    const cplx dP = 2.0 * u * z2 - zeta * R - (u * u) * (zeta * z2) / R;
    out.dt2 = (dP / z2) * out.t2 / (out.t2 - T);
    return out;
}

cplx t_root(double u, cplx z, int index) {
    if (index < 1 || index > 4) throw std::domain_error("t_root: index in 1..4");
    if (std::abs(z) > 0.96 && !(std::imag(z) == 0.0 && std::real(z) > 0.0 &&
                                std::real(z) <= 1.0))
        throw std::domain_error("t_root: |z| <= 0.95 or z in (0,1] required");
    const cplx zeta = std::sqrt(z);
    switch (index) {
        case 2: return slit_point(u, zeta).t2;
        case 1: return slit_point(-u, zeta).t2;
        case 3: return 1.0 / slit_point(u, zeta).t2;
        default: return 1.0 / slit_point(-u, zeta).t2;
    }
}

cplx pow_half(const SlitPoint& p, int n2) {
    if (n2 < 0) throw std::domain_error("pow_half: negative half-exponent");
    cplx out = 1.0;
    cplx base = p.t2;
    int m = n2 / 2;
    for (; m > 0; m /= 2) {
        if (m & 1) out *= base;
        base *= base;
    }
    if (n2 & 1) out *= p.sqrt_t2;
    return out;
}

}  // namespace qpwalk
