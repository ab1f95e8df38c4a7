// Benchmark: serial reference loop vs the OpenMP trial loop on the two
// heaviest suites, checking that both produce identical reports.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "relent/verifier.hpp"

using namespace relent;

namespace {

double runTimed(SuiteKind kind, const TrialConfig& cfg, SuiteResult& result) {
    const auto start = std::chrono::steady_clock::now();
    result = runSuite(kind, cfg);
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

bool sameResult(const SuiteResult& a, const SuiteResult& b) {
    return a.name == b.name && a.trials == b.trials && a.passes == b.passes &&
           a.failures == b.failures && a.worstViolation == b.worstViolation &&
           a.worstInstanceSeed == b.worstInstanceSeed;
}

} // namespace

int main(int argc, char** argv) {
    TrialConfig cfg = TrialConfig::defaults();
    cfg.trials = 200;
    if (argc > 1) cfg.trials = std::atol(argv[1]);

    std::vector<int> threadCounts{1, 2, 4};
#ifdef _OPENMP
    const int hw = omp_get_max_threads();
    if (hw > 4) threadCounts.push_back(hw);
#else
    std::puts("(built without OpenMP: every row runs the serial reference loop)");
#endif

    const SuiteKind kinds[] = {SuiteKind::Theorem21, SuiteKind::Prop31};
    bool allMatch = true;

    std::printf("%-12s %8s %10s %10s  %s\n", "suite", "threads", "time[s]", "speedup",
                "matches serial");
    for (SuiteKind kind : kinds) {
        SuiteResult reference;
        cfg.threads = 1;
        const double serial = runTimed(kind, cfg, reference);
        std::printf("%-12s %8d %10.3f %10s  %s\n", reference.name.c_str(), 1, serial, "1.00x",
                    "-");
        for (int t : threadCounts) {
            if (t == 1) continue;
            cfg.threads = t;
            SuiteResult r;
            const double elapsed = runTimed(kind, cfg, r);
            const bool match = sameResult(reference, r);
            allMatch = allMatch && match;
            char speedup[32];
            std::snprintf(speedup, sizeof speedup, "%.2fx", serial / elapsed);
            std::printf("%-12s %8d %10.3f %10s  %s\n", r.name.c_str(), t, elapsed, speedup,
                        match ? "yes" : "NO");
        }
    }

    if (!allMatch) {
        std::puts("FAIL: threaded runs diverged from the serial reference");
        return 1;
    }
    return 0;
}
