#include <doctest.h>

#include <cmath>
#include <vector>

#include "qpwalk/asymptotics.hpp"
#include "qpwalk/walk_dp.hpp"

using namespace qpwalk;

TEST_CASE("asymptotic constants") {
    CHECK(asymptotic_constant(1, 1) == doctest::Approx(1.099357).epsilon(2e-6));
    CHECK(tau_tail_constant(1, 1) == doctest::Approx(3.298070).epsilon(2e-6));
    CHECK(asymptotic_constant(2, 1) == asymptotic_constant(1, 2));
    CHECK_THROWS_AS(asymptotic_constant(0, 1), std::domain_error);
}

TEST_CASE("pringsheim transfer") {
    // Gamma(-3/2) = 4 sqrt(pi)/3
    const PowerAsymptote a = pringsheim_transfer(1.5, 1.5 * std::sqrt(3.0));
    CHECK(a.exponent == doctest::Approx(2.5));
    CHECK(a.amplitude ==
          doctest::Approx(1.5 * std::sqrt(3.0) / (4.0 * std::sqrt(M_PI) / 3.0))
              .epsilon(1e-13));
    CHECK(a.amplitude == doctest::Approx(asymptotic_constant(1, 1)).epsilon(1e-12));
    CHECK(a(10.0) == doctest::Approx(a.amplitude * std::pow(10.0, -2.5)));
    const PowerAsymptote zero = pringsheim_transfer(1.5, 0.0);
    CHECK(zero(123.0) == 0.0);
    CHECK_THROWS_AS(pringsheim_transfer(2.0, 1.0), std::domain_error);
}

TEST_CASE("tail fit recovers an exact power law") {
    std::vector<double> p(3000, 0.0);
    const double c = 0.7253;
    for (int k = 1; k < 3000; ++k) p[k] = c * std::pow(k, -2.5);
    const TailFit f = tail_fit(p, 100, 2500);
    CHECK(f.exponent == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(f.constant == doctest::Approx(c).epsilon(1e-10));
    CHECK(f.residual <= 1e-12);

    std::vector<double> bad(50, 0.0);
    CHECK_THROWS_AS(tail_fit(bad, 10, 40), std::domain_error);
    CHECK_THROWS_AS(tail_fit(p, 100, 105), std::domain_error);
}

TEST_CASE("tail fit on the computed law lands near the k^-5/2 amplitude") {
    const AbsorptionTable t = dp_absorption(1, 1, 800, DpMode::floating);
    const TailFit f = tail_fit(t.p_S, 200, 800);
    CHECK(f.exponent == doctest::Approx(2.5).epsilon(0.02));
    CHECK(std::abs(f.constant / asymptotic_constant(1, 1) - 1.0) <= 0.10);
    // survival tail: amplitude consistent with twice the integrated density
    const auto tail = survival_tail(t);
    const TailFit g = tail_fit(std::span<const double>(tail.data(), tail.size()), 200, 800);
    CHECK(g.exponent == doctest::Approx(1.5).epsilon(0.02));
    CHECK(std::abs(g.constant / (0.75 * std::sqrt(3.0 / M_PI) * 2.0) - 1.0) <= 0.10);
}

TEST_CASE("coefficient extraction against the absorption series") {
    const AbsorptionTable t = dp_absorption(1, 1, 64, DpMode::floating);
    const CoefficientSeries cs = extract_coefficients(1, 1, 0.9, 512);
    CHECK(cs.aliasing_bound <= 1e-20);
    CHECK(std::abs(cs.coefficients[0]) <= 1e-12);
    CHECK(std::abs(cs.coefficients[1] - 1.0 / 3.0) <= 1e-10);
    CHECK(cs.max_imag_residue <= 1e-10);
    for (int k = 1; k <= 64; ++k) {
        if (t.p_S[k] <= 1e-8) continue;
        CHECK(std::abs(cs.coefficients[k] - t.p_S[k]) / t.p_S[k] <= 1e-6);
        CHECK(cs.coefficients[k] >= -1e-12);
        CHECK(cs.reliable(k));
    }
    CHECK_THROWS_AS(extract_coefficients(1, 1, 0.9, 100), std::domain_error);
    CHECK_THROWS_AS(extract_coefficients(1, 1, 1.1, 256), std::domain_error);
}

TEST_CASE("closed-form slit integral identity, k = 0,1,2") {
    for (int k : {0, 1, 2})
        for (double z : {0.3, 0.5, 0.7})
            CHECK(slit_integral_identity(k, z).diff <= 1e-10);
    // z -> 0 limit of the k = 0 integral is the weight mass pi/2
    CHECK(slit_integral_identity(0, 1e-4).lhs == doctest::Approx(M_PI / 2.0).epsilon(1e-3));
    CHECK_THROWS_AS(slit_integral_identity(3, 0.5), std::domain_error);
}

TEST_CASE("log-singularity fits recover the known amplitudes") {
    const double s3 = std::sqrt(3.0);
    const LogFit a0 = log_singularity_fit(0.5, 0);
    CHECK(std::abs(a0.coefficient / (0.75 * s3) - 1.0) <= 0.02);
    const LogFit g0 = log_singularity_fit(1.5, 0);
    CHECK(std::abs(g0.coefficient / (-1.5 * s3) - 1.0) <= 0.03);
    CHECK_THROWS_AS(log_singularity_fit(0.7, 0), std::domain_error);
}

TEST_CASE("transferred (1-z)^3/2 amplitude matches the direct tail fit") {
    const SingularFit f = singular_coefficient_fit(1, 1);
    const PowerAsymptote a =
        pringsheim_transfer(1.5, f.total_coefficients[SingularFit::idx_e32]);
    const AbsorptionTable t = dp_absorption(1, 1, 800, DpMode::floating);
    const TailFit tf = tail_fit(t.p_S, 200, 800);
    CHECK(std::abs(a.amplitude / tf.constant - 1.0) <= 0.10);
    CHECK(std::abs(a.exponent - tf.exponent) <= 0.1);
}

TEST_CASE("singular fit: part amplitudes match and the total sqrt term cancels") {
    const SingularFit f = singular_coefficient_fit(1, 1);
    const double s3 = std::sqrt(3.0);
    CHECK(std::abs(f.part_coefficients[0][SingularFit::idx_sqrt] / (-s3) - 1.0) <= 0.05);
    CHECK(std::abs(f.part_coefficients[1][SingularFit::idx_sqrt] / (s3 / 2) - 1.0) <= 0.05);
    CHECK(std::abs(f.part_coefficients[2][SingularFit::idx_sqrt] / (s3 / 2) - 1.0) <= 0.05);
    CHECK(std::abs(f.total_coefficients[SingularFit::idx_sqrt]) <= 0.01 * s3);
    CHECK(std::abs(f.total_coefficients[SingularFit::idx_elog]) <=
          0.01 * (s3 / (2.0 * M_PI)));
    CHECK(std::abs(f.total_coefficients[SingularFit::idx_e32] / (1.5 * s3) - 1.0) <= 0.05);
    CHECK(f.condition > 0.0);
    CHECK(f.fit_residuals[3] <= 1e-6);
}
