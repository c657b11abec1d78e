#include <doctest.h>

#include <array>
#include <cmath>
#include <map>

#include "qpwalk/voter.hpp"
#include "qpwalk/walk_dp.hpp"

using namespace qpwalk;

TEST_CASE("interface count is 2N + 1") {
    CHECK(interfaces(BlockConfig{{1, 1}}) == 3);
    CHECK(interfaces(BlockConfig{{2, 3, 1, 4}}) == 5);
    CHECK(interfaces(BlockConfig{}) == 1);
}

TEST_CASE("single-interface resolutions from [(1,1)]") {
    // "01" interface filled with "00": m1 dies, Heaviside
    BlockConfig c{{1, 1}};
    step_chosen(c, 1, false);
    CHECK(c.N() == 0);
    // leftmost "10" filled with "00": the infinite 1-block cedes a site
    c = BlockConfig{{1, 1}};
    step_chosen(c, 0, false);
    CHECK(c.sizes == std::vector<long long>{2, 1});
    // rightmost "10" filled with "11": m1 grows
    c = BlockConfig{{1, 1}};
    step_chosen(c, 2, true);
    CHECK(c.sizes == std::vector<long long>{1, 2});
    // n1 dying merges through the left infinite block
    c = BlockConfig{{1, 2, 3, 4}};
    step_chosen(c, 0, true);
    CHECK(c.sizes == std::vector<long long>{3, 4});
    // internal merge: "10" between m1 and n2 filled with "00" kills m1 and
    // coalesces the zeros (the converted cell joins them: 2 + 1 + 3)
    c = BlockConfig{{2, 1, 3, 4}};
    step_chosen(c, 2, false);
    CHECK(c.sizes == std::vector<long long>{6, 4});
    CHECK_THROWS_AS(step_chosen(c, 99, true), std::domain_error);
    BlockConfig heaviside{};
    CHECK_THROWS_AS(step_chosen(heaviside, 0, true), std::domain_error);
}

TEST_CASE("for N = 1 the induced increment law is the six-step kernel") {
    RngStream rng(12345, 0);
    std::map<std::pair<long long, long long>, long long> counts;
    const long long n = 1000000;
    for (long long i = 0; i < n; ++i) {
        BlockConfig c{{5, 5}};  // large enough that no merge happens in one step
        step(c, rng);
        counts[{c.sizes[0] - 5, c.sizes[1] - 5}]++;
    }
    CHECK(counts.size() == 6);
    const std::array<std::pair<long long, long long>, 6> expected{{
        {1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};
    for (const auto& d : expected) {
        REQUIRE(counts.count(d) == 1);
        CHECK(std::abs(counts[d] / double(n) - 1.0 / 6.0) <= 0.002);
    }
}

TEST_CASE("run_to_heaviside records level passages") {
    RngStream rng(7, 0);
    PassageRecord r0 = run_to_heaviside(BlockConfig{}, rng, 100);
    CHECK(r0.heaviside_time == 0);
    CHECK(r0.passage_times.empty());
    CHECK_FALSE(r0.truncated);

    for (int trial = 0; trial < 200; ++trial) {
        RngStream rng2(99, trial);
        PassageRecord r = run_to_heaviside(BlockConfig{{1, 1, 1, 1}}, rng2, 1000000);
        REQUIRE_FALSE(r.truncated);
        REQUIRE(r.passage_times.size() == 2);  // N decreases one level at a time
        CHECK(r.passage_times[0].first == 1);
        CHECK(r.passage_times[1].first == 0);
        CHECK(r.passage_times[0].second < r.passage_times[1].second);
        CHECK(r.passage_times[1].second == r.heaviside_time);
    }
    CHECK_THROWS_AS(run_to_heaviside(BlockConfig{{1, 1}}, rng, 0), std::domain_error);
}

TEST_CASE("one-step absorption probability of [(1,1)] is 2/3") {
    const McSummary s = estimate_distribution(BlockConfig{{1, 1}}, 100000, 5, 8);
    CHECK(std::abs(s.pmf[1] - 2.0 / 3.0) <= 0.005);
}

TEST_CASE("block dynamics matches the absorbed walk's hitting law") {
    const AbsorptionTable t = dp_absorption(1, 1, 20, DpMode::floating);
    const McSummary s = estimate_distribution(BlockConfig{{1, 1}}, 200000, 31, 20);
    for (int k = 0; k <= 20; ++k)
        CHECK(std::abs(s.pmf[k] - t.p_tau[k]) <= 0.005);
    double mass = 0.0;
    for (double p : s.pmf) mass += p;
    CHECK(mass + (s.beyond_kmax + s.truncated) / double(s.trials) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("determinism: identical (seed, stream) gives identical records") {
    RngStream a(2024, 17), b(2024, 17);
    const PassageRecord ra = run_to_heaviside(BlockConfig{{3, 2, 1, 1}}, a, 1000000);
    const PassageRecord rb = run_to_heaviside(BlockConfig{{3, 2, 1, 1}}, b, 1000000);
    CHECK(ra.heaviside_time == rb.heaviside_time);
    CHECK(ra.passage_times == rb.passage_times);

    const McSummary s1 = estimate_distribution(BlockConfig{{2, 2}}, 5000, 9, 32, 1000000, 1);
    const McSummary s3 = estimate_distribution(BlockConfig{{2, 2}}, 5000, 9, 32, 1000000, 3);
    CHECK(s1.pmf == s3.pmf);
    CHECK(s1.mean == s3.mean);
    CHECK(s1.truncated == s3.truncated);
}

TEST_CASE("blocks stay positive and N never increases") {
    RngStream rng(555, 1);
    BlockConfig c{{2, 1, 4, 3, 1, 2}};
    int n_prev = c.N();
    for (int i = 0; i < 20000 && c.N() > 0; ++i) {
        step(c, rng);
        CHECK(c.N() <= n_prev);
        if (c.N() < n_prev) CHECK(c.N() == n_prev - 1);
        n_prev = c.N();
        for (long long s : c.sizes) CHECK(s >= 1);
    }
}
