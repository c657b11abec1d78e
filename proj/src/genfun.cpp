#include "qpwalk/genfun.hpp"

#include <cmath>

#include "qpwalk/gluing.hpp"

namespace qpwalk {

QuadratureRule::QuadratureRule(int n) : order(n) {
    if (n < 1) throw std::domain_error("QuadratureRule: order >= 1");
    nodes.resize(n);
    weights.resize(n);
    const double step = M_PI / (n + 1);
    for (int j = 1; j <= n; ++j) {
        const double s = std::sin(j * step);
        nodes[j - 1] = std::cos(j * step);
        weights[j - 1] = step * s * s;
    }
}

namespace {

cplx int_pow(cplx b, int e) {
    cplx out = 1.0;
    for (; e > 0; e /= 2) {
        if (e & 1) out *= b;
        b *= b;
    }
    return out;
}

// Y0(1,z) in closed form; the square-root argument stays off the cut for
// |z| <= 0.95, z != 0.
cplx Y0_at_one(cplx z) {
    return (3.0 - z - 3.0 * std::sqrt((1.0 - z) * (1.0 + z / 3.0))) / (2.0 * z);
}

struct PartSums {
    cplx h2_full{0.0}, h3_full{0.0};
    cplx h2_half{0.0}, h3_half{0.0};
    bool has_half = false;
};

// Accumulates the substituted h2/h3 integrands over the rule. For general x
// the prefactor x and the 1/(t-x) Cauchy kernel follow the pre-substitution
// form; at x = 1 this reduces to the specialized x = 1 integral.
PartSums accumulate(cplx x, cplx zeta, int x0, int y0, cplx q0, cplx q1,
                    const QuadratureRule& rule) {
    PartSums ps;
    const int n = rule.order;
    const bool embedded = (n % 2 == 1) && n >= 3;
    ps.has_half = embedded;
    const int m = (n - 1) / 2;
    const double hstep = M_PI / (m + 1);
    for (int j = 1; j <= n; ++j) {
        const double u = rule.nodes[j - 1];
        const SlitPoint sp = slit_point(u, zeta);
        const double U = chebyshev_U(y0 - 1, u);
        const cplx f2 = U * pow_half(sp, 2 * (x0 - 1) + y0) / (sp.t2 - x) * sp.dt2;
        const cplx f3 = U * pow_half(sp, 2 * x0 + y0) *
                        (1.0 / (sp.t2 - q0) + 1.0 / (sp.t2 - q1) -
                         1.0 / (sp.t2 + 1.0)) * sp.dt2;
        ps.h2_full += rule.weights[j - 1] * f2;
        ps.h3_full += rule.weights[j - 1] * f3;
        if (embedded && j % 2 == 0) {
            const double sh = std::sin((j / 2) * hstep);
            const double wh = hstep * sh * sh;
            ps.h2_half += wh * f2;
            ps.h3_half += wh * f3;
        }
    }
    return ps;
}

}  // namespace

std::array<HEvaluation, 3> h_parts(cplx x, cplx z, int x0, int y0,
                                   const QuadratureRule& rule) {
    if (x0 < 1 || y0 < 1) throw std::domain_error("h_parts: interior start required");
    if (std::abs(z) >= 1.0 || std::abs(1.0 - z) < 1e-6)
        throw std::domain_error("h_parts: need |z| < 1 and |1-z| >= 1e-6");
    if (std::abs(z) > 0.96 && std::imag(z) != 0.0)
        throw std::domain_error("h_parts: complex z supported for |z| <= 0.95");
    if (std::imag(z) == 0.0 && std::real(z) > 0.0 && std::imag(x) == 0.0) {
        const BranchPoints bp = branch_points(std::real(z));
        const double xr = std::real(x);
        if (xr >= bp.x1 && xr <= bp.x2)
            throw std::domain_error("h_parts: x lies on the slit [x1,x2]");
    }
    if (x == cplx(0.0)) return {};  // h(0,z) = 0, all three parts vanish
    if (z == cplx(0.0)) return {};  // no absorption at time 0

    const cplx zeta = std::sqrt(z);
    cplx ysmall, ybig;
    if (x == cplx(1.0)) {
        ysmall = Y0_at_one(z);
        ybig = 1.0 / ysmall;
    } else {
        std::tie(ysmall, ybig) = Y_roots_ordered(x, z);
    }
    const cplx q0 = ysmall / x, q1 = ybig / x;
    const PartSums ps = accumulate(x, zeta, x0, y0, q0, q1, rule);

    std::array<HEvaluation, 3> out;
    out[0].value = int_pow(x, x0) * int_pow(ysmall, y0);
    out[0].error_estimate = 0.0;
    out[1].value = x * ps.h2_full / M_PI;
    out[2].value = ps.h3_full / M_PI;
    if (ps.has_half) {
        out[1].error_estimate = std::abs(x * (ps.h2_full - ps.h2_half) / M_PI);
        out[2].error_estimate = std::abs((ps.h3_full - ps.h3_half) / M_PI);
    }
    return out;
}

HEvaluation h_total(cplx x, cplx z, int x0, int y0) {
    if (x == cplx(0.0) || z == cplx(0.0)) return HEvaluation{0.0, 0.0, true};
    HEvaluation out;
    cplx prev = 0.0;
    bool have_prev = false;
    for (int n = 127; n <= 4095; n = 2 * n + 1) {
        const QuadratureRule rule(n);
        const auto parts = h_parts(x, z, x0, y0, rule);
        const cplx total = parts[0].value + parts[1].value + parts[2].value;
        if (have_prev) {
            const double change = std::abs(total - prev);
            out.value = total;
            out.error_estimate = change;
            if (change <= 1e-12 * (1.0 + std::abs(total))) {
                out.converged = true;
                return out;
            }
        }
        prev = total;
        have_prev = true;
    }
    out.converged = false;
    return out;
}

HEvaluation h_tilde_total(cplx y, cplx z, int x0, int y0) {
    return h_total(y, z, y0, x0);
}

cplx G_truncated(cplx x, cplx y, cplx z, int x0, int y0, int K) {
    if (std::abs(x) > 1.0 + 1e-12 || std::abs(y) > 1.0 + 1e-12 ||
        std::abs(z) >= 1.0)
        throw std::domain_error("G_truncated: |x|,|y| <= 1 and |z| < 1");
    const OccupationPoint pt{x, y, z};
    return occupation_series(x0, y0, K, std::span<const OccupationPoint>(&pt, 1))[0];
}

double functional_eq_residual(cplx x, cplx y, cplx z, int x0, int y0, int K) {
    const cplx G = G_truncated(x, y, z, x0, y0, K);
    const cplx hx = h_total(x, z, x0, y0).value;
    const cplx hy = h_tilde_total(y, z, x0, y0).value;
    return std::abs(kernel_Q(x, y, z) * G - hx - hy +
                    int_pow(x, x0) * int_pow(y, y0));
}

double boundary_residual(double z, int x0, int y0, int samples, int K) {
    if (!(z > 0.0 && z < 1.0)) throw std::domain_error("boundary_residual: z in (0,1)");
    const CurveSample cs = curve_sample(z, samples);
    const AbsorptionTable tab = dp_absorption(x0, y0, K, DpMode::floating, true);

    auto h_series = [&](cplx t) {
        // absolutely convergent for |t| <= sqrt(x2(z)) < 1
        cplx acc = 0.0, zp = 1.0;
        for (int k = 0; k <= K; ++k) {
            const auto& row = tab.site_hits_x[k];
            cplx tp = t, sk = 0.0;
            for (size_t i = 1; i < row.size(); ++i) {
                if (row[i] != 0.0) sk += row[i] * tp;
                tp *= t;
            }
            acc += zp * sk;
            zp *= z;
        }
        return acc;
    };

    double worst = 0.0;
    for (size_t j = 0; j < cs.points.size(); ++j) {
        const cplx t = cs.points[j];
        const cplx tc = std::conj(t);
        const cplx y0t = Y_roots_ordered(t, z).first;   // equals the abscissa
        const cplx y0tc = Y_roots_ordered(tc, z).first;
        const cplx lhs = h_series(t) - h_series(tc);
        const cplx rhs = int_pow(t, x0) * int_pow(y0t, y0) -
                         int_pow(tc, x0) * int_pow(y0tc, y0);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

}  // namespace qpwalk
