#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qpwalk {

/// Block representation of a configuration with N finite blocks:
/// ...111 [0^n1][1^m1][0^n2][1^m2]...[0^nN][1^mN] 000...
/// N = 0 is the (absorbing) Heaviside class.
struct BlockConfig {
    // flat sizes [n1, m1, n2, m2, ...]; all >= 1
    std::vector<long long> sizes;
    int N() const { return static_cast<int>(sizes.size() / 2); }
};

/// Deterministic splittable stream: identical (seed, stream) gives an
/// identical draw sequence on any platform. (pcg32 with stream selection.)
struct RngStream {
    std::uint64_t state = 0, inc = 0;
    RngStream(std::uint64_t seed, std::uint64_t stream);
    std::uint32_t next_u32();
    std::uint32_t uniform_below(std::uint32_t n);  // uniform in [0, n)
    bool next_bit();
};

/// Number of "01"/"10" adjacencies: 2N + 1.
int interfaces(const BlockConfig& config);

/// Applies the resolution of interface j (0-based, left to right) filled with
/// "11" (fill_one) or "00"; merges vanished blocks immediately.
void step_chosen(BlockConfig& config, int interface_index, bool fill_one);

/// One dynamics step: uniform interface choice, then a fair fill coin.
void step(BlockConfig& config, RngStream& rng);

struct PassageRecord {
    // (N reached, time step) for each level decrease, ending at N = 0
    std::vector<std::pair<int, long long>> passage_times;
    long long heaviside_time = 0;  // meaningful unless truncated
    bool truncated = false;
};

/// Iterates the dynamics until the Heaviside class or the step cap.
PassageRecord run_to_heaviside(BlockConfig config, RngStream& rng,
                               long long cap);

/// Monte Carlo law of the Heaviside hitting time.
struct McSummary {
    long long trials = 0;
    std::uint64_t seed = 0;
    long long cap = 0;
    int kmax = 0;
    long long truncated = 0;          // runs that hit the cap
    long long beyond_kmax = 0;        // finished after kmax (still in mean)
    std::vector<double> pmf;          // pmf[k], k = 0..kmax
    double mean = 0.0;                // over finished runs
};

/// Trial i draws from stream index i, so the result is independent of the
/// worker count. threads = 0 reads QP_THREADS (default: hardware).
McSummary estimate_distribution(const BlockConfig& config, long long trials,
                                std::uint64_t seed, int kmax,
                                long long cap = 1000000, int threads = 0);

}  // namespace qpwalk
