// Acceptance suite: one verification criterion per line, nonzero exit on any
// failure. Run a single criterion with --criterion N (used by ctest) or all.
#include <cstdio>
#include <cstring>
#include <string>

#include "qpwalk/criteria.hpp"

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else if (std::strcmp(argv[i], "--help") == 0) {
            std::printf("usage: %s [--criterion N]\n", argv[0]);
            return 0;
        }
    }
    int failures = 0;
    for (int id = 1; id <= qpwalk::kCriterionCount; ++id) {
        if (only != 0 && id != only) continue;
        const qpwalk::CriterionResult r = qpwalk::run_criterion(id);
        std::printf("[%s] criterion %2d: %s (%s)\n", r.pass ? "PASS" : "FAIL",
                    r.id, r.name.c_str(), r.detail.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
