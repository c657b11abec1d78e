#include "qpwalk/voter.hpp"

#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace qpwalk {

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) {
    inc = (stream << 1u) | 1u;
    state = 0;
    (void)next_u32();
    state += seed;
    (void)next_u32();
}

std::uint32_t RngStream::next_u32() {
    const std::uint64_t old = state;
    state = old * 6364136223846793005ULL + inc;
    const std::uint32_t xorshifted =
        static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    const std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

std::uint32_t RngStream::uniform_below(std::uint32_t n) {
    // rejection below the largest multiple of n
    const std::uint32_t limit = UINT32_MAX - UINT32_MAX % n;
    std::uint32_t v;
    do { v = next_u32(); } while (v >= limit);
    return v % n;
}

bool RngStream::next_bit() { return (next_u32() & 1u) != 0; }

int interfaces(const BlockConfig& config) { return 2 * config.N() + 1; }

void step_chosen(BlockConfig& config, int j, bool fill_one) {
    const int N = config.N();
    if (N == 0) throw std::domain_error("step: Heaviside class is absorbing");
    if (j < 0 || j > 2 * N) throw std::domain_error("step: interface index");
    auto& s = config.sizes;
    // interface j sits between flat blocks j-1 and j; -1 and 2N are the
    // infinite end blocks. Even j is a "10" boundary, odd j is "01"; the
    // chosen fill shrinks the block holding the opposite symbol.
    const bool even = (j % 2 == 0);
    const int zeros_side = even ? j : j - 1;  // flat index of the 0-block at j
    const int ones_side = even ? j - 1 : j;
    const int shrink = fill_one ? zeros_side : ones_side;
    const int grow = fill_one ? ones_side : zeros_side;
    if (grow >= 0 && grow < 2 * N) s[grow] += 1;
    if (shrink >= 0 && shrink < 2 * N) {
        s[shrink] -= 1;
        if (s[shrink] == 0) {
            // vanished block: neighbors carry the same symbol and merge
            const int f = shrink;
            if (f == 0 || f == 2 * N - 1) {
                // end block merges into the adjacent infinite block,
                // removing one (n, m) pair
                const int base = (f == 0) ? 0 : 2 * N - 2;
                s.erase(s.begin() + base, s.begin() + base + 2);
            } else {
                s[f - 1] += s[f + 1];
                s.erase(s.begin() + f, s.begin() + f + 2);
            }
        }
    }
}

void step(BlockConfig& config, RngStream& rng) {
    const int n = interfaces(config);
    if (config.N() == 0) throw std::domain_error("step: Heaviside class is absorbing");
    const int j = static_cast<int>(rng.uniform_below(static_cast<std::uint32_t>(n)));
    const bool fill_one = rng.next_bit();
    step_chosen(config, j, fill_one);
}

PassageRecord run_to_heaviside(BlockConfig config, RngStream& rng,
                               long long cap) {
    if (cap < 1) throw std::domain_error("run_to_heaviside: cap >= 1");
    PassageRecord rec;
    int level = config.N();
    long long k = 0;
    while (level > 0) {
        if (k >= cap) {
            rec.truncated = true;
            rec.heaviside_time = -1;
            return rec;
        }
        step(config, rng);
        ++k;
        if (config.N() < level) {
            level = config.N();
            rec.passage_times.emplace_back(level, k);
        }
    }
    rec.heaviside_time = k;
    return rec;
}

McSummary estimate_distribution(const BlockConfig& config, long long trials,
                                std::uint64_t seed, int kmax, long long cap,
                                int threads) {
    if (trials < 1) throw std::domain_error("estimate_distribution: trials >= 1");
    if (kmax < 0) throw std::domain_error("estimate_distribution: kmax >= 0");
    if (threads <= 0) {
        if (const char* env = std::getenv("QP_THREADS"))
            threads = std::max(1, std::atoi(env));
        else
            threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<int>(std::min<long long>(threads, trials));

    struct Tally {
        std::vector<long long> bins;
        long long truncated = 0, beyond = 0;
        long long time_sum = 0, finished = 0;
    };
    std::vector<Tally> tallies(threads);
    auto worker = [&](int w) {
        Tally& t = tallies[w];
        t.bins.assign(kmax + 1, 0);
        for (long long i = w; i < trials; i += threads) {
            RngStream rng(seed, static_cast<std::uint64_t>(i));
            PassageRecord rec = run_to_heaviside(config, rng, cap);
            if (rec.truncated) {
                ++t.truncated;
            } else {
                ++t.finished;
                t.time_sum += rec.heaviside_time;
                if (rec.heaviside_time <= kmax)
                    ++t.bins[rec.heaviside_time];
                else
                    ++t.beyond;
            }
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }

    McSummary out;
    out.trials = trials;
    out.seed = seed;
    out.cap = cap;
    out.kmax = kmax;
    out.pmf.assign(kmax + 1, 0.0);
    long long finished = 0, time_sum = 0;
    for (const Tally& t : tallies) {
        out.truncated += t.truncated;
        out.beyond_kmax += t.beyond;
        finished += t.finished;
        time_sum += t.time_sum;
        for (int k = 0; k <= kmax; ++k) out.pmf[k] += static_cast<double>(t.bins[k]);
    }
    for (double& v : out.pmf) v /= static_cast<double>(trials);
    out.mean = finished > 0 ? static_cast<double>(time_sum) / finished : 0.0;
    return out;
}

}  // namespace qpwalk
