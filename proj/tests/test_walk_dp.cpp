#include <doctest.h>

#include <cmath>

#include "qpwalk/walk_dp.hpp"

using namespace qpwalk;

TEST_CASE("step kernel: the six unit jumps with total mass one") {
    double total = 0.0;
    int sx = 0, sy = 0;
    for (const auto& s : StepKernel::steps) {
        total += StepKernel::prob;
        sx += s.dx;
        sy += s.dy;
        CHECK(std::abs(s.dx) <= 1);
        CHECK(std::abs(s.dy) <= 1);
        CHECK(!(s.dx == 0 && s.dy == 0));
    }
    CHECK(std::abs(total - 1.0) <= 1e-15);
    CHECK(sx == 0);  // zero drift
    CHECK(sy == 0);
}

TEST_CASE("two steps from (1,1), exact: hand-enumerated masses") {
    const AbsorptionTable t = dp_absorption(1, 1, 2, DpMode::exact, true);
    CHECK(t.exact_p_S(0).to_fraction_string() == "0");
    CHECK(t.exact_p_S(1).to_fraction_string() == "1/3");
    CHECK(t.exact_p_S(2).to_fraction_string() == "1/18");
    CHECK(t.exact_p_T(1).to_fraction_string() == "1/3");
    CHECK(t.exact_p_T(2).to_fraction_string() == "1/18");
    CHECK(t.exact_survival(2).to_fraction_string() == "2/9");
    CHECK(t.survival[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    // site-resolved: (1,0) and (2,0) at k=1 each 1/6; (2,0),(3,0) at k=2 each 1/36
    CHECK(ExactProb{t.site_hits_x_num[1][1], 1}.to_fraction_string() == "1/6");
    CHECK(ExactProb{t.site_hits_x_num[1][2], 1}.to_fraction_string() == "1/6");
    CHECK(ExactProb{t.site_hits_x_num[2][2], 2}.to_fraction_string() == "1/36");
    CHECK(ExactProb{t.site_hits_x_num[2][3], 2}.to_fraction_string() == "1/36");
    // site masses add up to p_S at each k
    for (int k = 0; k <= 2; ++k) {
        bigint s = 0;
        for (const bigint& v : t.site_hits_x_num[k]) s += v;
        CHECK(s == t.p_S_num[k]);
    }
}

TEST_CASE("horizon zero and preconditions") {
    const AbsorptionTable t = dp_absorption(3, 2, 0, DpMode::floating);
    CHECK(t.p_tau[0] == 0.0);
    CHECK(t.survival[0] == 1.0);
    CHECK_THROWS_AS(dp_absorption(0, 1, 5, DpMode::floating), std::domain_error);
    CHECK_THROWS_AS(dp_absorption(1, 1, 201, DpMode::exact), std::domain_error);
}

TEST_CASE("mass conservation and table invariants (float, K = 400)") {
    const AbsorptionTable t = dp_absorption(2, 3, 400, DpMode::floating, true);
    double acc = 0.0;
    for (int k = 0; k <= 400; ++k) {
        acc += t.p_tau[k];
        CHECK(t.p_tau[k] == t.p_S[k] + t.p_T[k]);
        CHECK(t.survival[k] >= -1e-15);
        if (k > 0) CHECK(t.survival[k] <= t.survival[k - 1] + 1e-15);
        // no x-axis mass before y0 down-moves are possible, and symmetrically
        if (k < 3) CHECK(t.p_S[k] == 0.0);
        if (k < 2) CHECK(t.p_T[k] == 0.0);
        double sx = 0.0;
        for (double v : t.site_hits_x[k]) sx += v;
        CHECK(std::abs(sx - t.p_S[k]) <= 1e-15 * (1.0 + t.p_S[k]));
    }
    CHECK(std::abs(acc + t.survival[400] - 1.0) <= 1e-12);
}

TEST_CASE("exact and float tables agree to 1e-12 at K = 200") {
    const AbsorptionTable e = dp_absorption(1, 1, 200, DpMode::exact);
    const AbsorptionTable f = dp_absorption(1, 1, 200, DpMode::floating);
    for (int k = 0; k <= 200; ++k) {
        CHECK(std::abs(e.p_S[k] - f.p_S[k]) <= 1e-12);
        CHECK(std::abs(e.p_T[k] - f.p_T[k]) <= 1e-12);
        CHECK(std::abs(e.survival[k] - f.survival[k]) <= 1e-12);
    }
}

TEST_CASE("swap symmetry p_T(x0,y0) = p_S(y0,x0)") {
    CHECK(swap_symmetry_check(1, 1, 10, DpMode::exact));
    CHECK(swap_symmetry_check(2, 5, 50, DpMode::floating));
    CHECK(swap_symmetry_check(1, 3, 3, DpMode::exact));
    const AbsorptionTable a = dp_absorption(1, 3, 3, DpMode::exact);
    const AbsorptionTable b = dp_absorption(3, 1, 3, DpMode::exact);
    CHECK(a.p_T_num[3] == b.p_S_num[3]);
}

TEST_CASE("survival tail values") {
    const AbsorptionTable t = dp_absorption(1, 1, 10, DpMode::exact);
    const auto tail = survival_tail(t);
    CHECK(tail[0] == 1.0);
    CHECK(tail[1] == 1.0);  // absorption needs at least one step
    CHECK(tail[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("tau tail follows the k^-3/2 law with the series-consistent amplitude") {
    // P[tau >= k] * k^{3/2} -> (3/4) sqrt(3/pi) x0 y0 (x0+y0); see the
    // acceptance suite for the long-horizon version of this check.
    const AbsorptionTable t = dp_absorption(1, 1, 600, DpMode::floating);
    const double v = t.survival[599] * std::pow(600.0, 1.5);
    const double amp = 0.75 * std::sqrt(3.0 / M_PI) * 2.0;
    CHECK(std::abs(v / amp - 1.0) <= 0.05);
}

TEST_CASE("occupation series: time-zero term and geometric tail bound") {
    const OccupationPoint p0{0.5, 0.25, 0.0};
    const auto g0 = occupation_series(2, 3, 5, std::span<const OccupationPoint>(&p0, 1));
    CHECK(std::abs(g0[0] - cplx(std::pow(0.5, 1) * std::pow(0.25, 2))) <= 1e-15);

    const OccupationPoint p1{1.0, 1.0, 0.5};
    const auto gk = occupation_series(1, 1, 100, std::span<const OccupationPoint>(&p1, 1));
    const auto gk2 = occupation_series(1, 1, 120, std::span<const OccupationPoint>(&p1, 1));
    CHECK(std::abs(gk[0] - gk2[0]) <= 2.0 * std::pow(0.5, 101));
}
