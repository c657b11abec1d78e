#include <doctest.h>

#include <cmath>
#include <random>

#include "qpwalk/gluing.hpp"

using namespace qpwalk;

TEST_CASE("cgf: zeros, reference value, pole") {
    for (double z : {0.3, 0.5, 0.7}) {
        CHECK(std::abs(cgf(0.0, z)) == 0.0);
        CHECK(std::abs(cgf(-1.0, z)) <= 1e-15);
    }
    CHECK(cgf(0.1, 0.5).real() == doctest::Approx(-0.305583).epsilon(2e-5));
    const BranchPoints b = branch_points(0.5);
    CHECK_THROWS_AS(cgf(b.x2, 0.5), std::domain_error);
}

TEST_CASE("cgf glues the two X-branches") {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> rad(0.1, 2.0), ang(0.0, 2.0 * M_PI);
    for (double z : {0.3, 0.5, 0.7}) {
        for (int i = 0; i < 100; ++i) {
            const double r = rad(gen), th = ang(gen);
            const cplx y = r * cplx(std::cos(th), std::sin(th));
            const auto [x0, x1] = Y_roots_ordered(y, z);
            const cplx w0 = cgf(x0, z), w1 = cgf(x1, z);
            const double scale = std::max({std::abs(w0), std::abs(w1), 1e-30});
            CHECK(std::abs(w0 - w1) / scale <= 1e-10);
        }
    }
}

TEST_CASE("mu: small-y0 closed forms") {
    const cplx t(0.4, 0.1), z(0.6, -0.05);
    const cplx a = kernel_a(t, z), b = kernel_b(t, z);
    CHECK(std::abs(mu(t, z, 1) - 1.0 / (2.0 * a)) <= 1e-14);
    CHECK(std::abs(mu(t, z, 2) - (-b / (2.0 * a * a))) <= 1e-14);
    CHECK_THROWS_AS(mu(-1.0, 0.5, 1), std::domain_error);
}

TEST_CASE("mu carries the jump of Y0^y0 across the slit") {
    // boundary value from above: V = (-b - i(-d)^{1/2})/(2a);
    // V^y0 - conj(V)^y0 = -2i (-d)^{1/2} mu_{y0}
    for (double z : {0.35, 0.5, 0.75}) {
        const BranchPoints bp = branch_points(z);
        for (int y0 : {1, 2, 3, 5, 8}) {
            for (int i = 1; i <= 12; ++i) {
                const double u = bp.x1 + (bp.x2 - bp.x1) * i / 13.0;
                const double a = std::real(kernel_a(u, z));
                const double b = std::real(kernel_b(u, z));
                const double sq = std::sqrt(-std::real(kernel_d(u, z)));
                const cplx v = cplx(-b, -sq) / (2.0 * a);
                cplx vp = 1.0, vcp = 1.0;
                for (int j = 0; j < y0; ++j) { vp *= v; vcp *= std::conj(v); }
                const cplx lhs = vp - vcp;
                const cplx rhs = cplx(0.0, -2.0) * sq * mu(u, z, y0);
                CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));
            }
        }
    }
}

TEST_CASE("group of the walk has order six, verified in exact rationals") {
    CHECK(group_order_check(500));
    CHECK_THROWS_AS(group_order_check(0), std::domain_error);
}

TEST_CASE("curve sample lies in the unit disc with |point|^2 = abscissa") {
    for (double z : {0.3, 0.5, 0.85}) {
        const CurveSample cs = curve_sample(z, 48);
        REQUIRE(cs.points.size() == 48);
        const BranchPoints b = branch_points(z);
        for (size_t j = 0; j < cs.points.size(); ++j) {
            CHECK(std::norm(cs.points[j]) ==
                  doctest::Approx(cs.abscissae[j]).epsilon(1e-12));
            CHECK(std::abs(cs.points[j]) <= std::sqrt(b.x2) + 1e-12);
            CHECK(cs.points[j].imag() > 0.0);  // one edge; the conjugate is the other
        }
    }
    // endpoints of the slit map to real points (d vanishes there)
    for (double z : {0.4, 0.6}) {
        const BranchPoints b = branch_points(z);
        for (double xe : {b.x1, b.x2}) {
            const cplx ye = Y_branch(xe, z, 0);
            CHECK(std::abs(ye.imag()) <= 1e-5 * (1.0 + std::abs(ye)));
        }
    }
    CHECK_THROWS_AS(curve_sample(0.5, 1), std::domain_error);
    CHECK_THROWS_AS(curve_sample(1.0, 8), std::domain_error);
}
