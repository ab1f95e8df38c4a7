// Property-based verification harness.  Each suite certifies one family of
// inequalities or limits on seeded random instances; every trial is a pure
// function of (master seed, suite stream, trial index), so reports are
// deterministic for a fixed configuration regardless of thread count.
//
// Violations are reported as the most negative eigenvalue of the slack
// matrix (or the scalar analogue), relative to 1 + the larger operand's max
// norm.  Failures are recorded, never thrown; a suite always runs to the end.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace relent {

struct IntRange {
    int lo = 1;
    int hi = 1;
};

struct TrialConfig {
    std::uint64_t seed = 42;
    int trials = 500;
    IntRange dims{1, 8};
    IntRange partitionSizes{1, 5};
    std::vector<double> lambdaGrid;    // defaults to 0.1, 0.2, ..., 1.0
    std::vector<double> limitLambdas;  // defaults to 1e-3, 1e-6
    std::vector<double> muGrid;        // defaults to -1, 0, 0.5, 1
    int kMax = 3;
    double tol = 1e-9;
    double crossCheckTol = 1e-10;  // route-agreement tolerance for dual-route identities
    double conditionCap = 1e4;
    int threads = 1;

    static TrialConfig defaults();
    void validate() const;  // throws std::invalid_argument on bad settings
};

struct SuiteResult {
    std::string name;
    long trials = 0;
    long passes = 0;
    long failures = 0;
    double worstViolation = 0.0;
    std::uint64_t worstInstanceSeed = 0;
    bool excludedFromOverall = false;
    std::string notes;
};

struct VerificationReport {
    std::vector<SuiteResult> suites;
    bool overallPass = false;
};

enum class SuiteKind { Scalar, Lemma21, Theorem21, Furuta, Prop31, Chains, Summed };

std::string_view suiteName(SuiteKind kind);
std::optional<SuiteKind> suiteFromName(std::string_view name);

// Runs one standard suite.
SuiteResult runSuite(SuiteKind kind, const TrialConfig& cfg);

// Runs the seven standard suites; overallPass means zero failures anywhere.
VerificationReport runAll(const TrialConfig& cfg);

// Opt-in probes beyond the certified regime: ill-conditioned stress tiers
// (condition cap 1e8, tolerance relaxed to 1e-6) and lambda outside (0,1].
// Always marked excludedFromOverall.
std::vector<SuiteResult> runExploratory(const TrialConfig& cfg);

// Dispatch by name: a standard suite token, "all", or "exploratory".
VerificationReport verify(std::string_view selector, const TrialConfig& cfg);

struct TrialOutcome {
    bool pass = true;
    double violation = 0.0;
};

// Re-runs a single trial of the named suite (standard or exploratory) from a
// recorded instance seed; lets a reported failure be reproduced in isolation.
TrialOutcome replayTrial(std::string_view suiteName, const TrialConfig& cfg,
                         std::uint64_t instanceSeed);

} // namespace relent
