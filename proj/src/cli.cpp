#include "relent/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "relent/json_io.hpp"
#include "relent/operator_entropy.hpp"
#include "relent/random.hpp"
#include "relent/scalar_entropy.hpp"
#include "relent/verifier.hpp"
#include "relent/version.hpp"

namespace relent {

namespace {

using nlohmann::json;

// Generator streams for `gen`, distinct from the verification suites'.
constexpr std::uint64_t kGenStreamSpd = 101;
constexpr std::uint64_t kGenStreamPartition = 102;
constexpr std::uint64_t kGenStreamProbVec = 103;

std::string formatScalar(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Inline JSON (starts with '[' or '{') or a path to a JSON file.
json loadJsonArg(const std::string& arg) {
    const size_t first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) {
        try {
            return json::parse(arg);
        } catch (const json::parse_error& e) {
            throw std::invalid_argument(std::string("invalid inline JSON: ") + e.what());
        }
    }
    return readJsonFile(arg);
}

IntRange parseRange(const std::string& text, const char* what) {
    IntRange r;
    int lo = 0, hi = 0;
    if (std::sscanf(text.c_str(), "%d..%d", &lo, &hi) == 2) {
        r.lo = lo;
        r.hi = hi;
    } else if (std::sscanf(text.c_str(), "%d", &lo) == 1 &&
               text.find_first_not_of("0123456789") == std::string::npos) {
        r.lo = r.hi = lo;
    } else {
        throw std::invalid_argument(std::string(what) + ": expected \"lo..hi\" or a single integer");
    }
    return r;
}

std::vector<double> parseGrid(const std::string& text, const char* what) {
    std::vector<double> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t comma = std::min(text.find(',', pos), text.size());
        try {
            out.push_back(std::stod(text.substr(pos, comma - pos)));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": expected comma-separated numbers");
        }
        pos = comma + 1;
    }
    return out;
}

void emit(const std::string& text, const std::string& outPath, std::ostream& out) {
    if (outPath.empty())
        out << text;
    else
        writeTextFile(outPath, text);
}

struct ComputeArgs {
    std::string functional;
    std::string a, b;
    std::string outPath;
    std::optional<double> lambda, mu, q;
    std::optional<int> k;
};

double need(const std::optional<double>& v, const char* flag, const std::string& functional) {
    if (!v) throw std::invalid_argument(functional + " requires " + flag);
    return *v;
}

int runCompute(const ComputeArgs& c, std::ostream& out) {
    const std::string& fn = c.functional;
    if (c.a.empty() || c.b.empty()) throw std::invalid_argument(fn + " requires --a and --b");

    json result;
    if (fn == "tsallis-scalar" || fn == "dq") {
        const ProbVector a = probVectorFromJson(loadJsonArg(c.a));
        const ProbVector b = probVectorFromJson(loadJsonArg(c.b));
        const double v = fn == "dq"
                             ? tsallisDivergence(a, b, need(c.q, "--q", fn))
                             : tsallisRelativeEntropy(a, b, need(c.lambda, "--lambda", fn));
        emit(formatScalar(v) + "\n", c.outPath, out);
        return 0;
    }
    if (fn == "quantum-tsallis") {
        const DensityMatrix rho(matrixFromJson(loadJsonArg(c.a)));
        const DensityMatrix sigma(matrixFromJson(loadJsonArg(c.b)));
        const double v = quantumTsallisDivergence(rho, sigma, need(c.q, "--q", fn));
        emit(formatScalar(v) + "\n", c.outPath, out);
        return 0;
    }

    const HermitianMatrix a = matrixFromJson(loadJsonArg(c.a));
    const HermitianMatrix b = matrixFromJson(loadJsonArg(c.b));
    HermitianMatrix r(1);
    if (fn == "natural-power") {
        r = naturalPower(a, b, need(c.lambda, "--lambda", fn));
    } else if (fn == "tsallis-op") {
        r = tsallisOperatorEntropy(a, b, need(c.lambda, "--lambda", fn));
    } else if (fn == "roe") {
        r = relativeOperatorEntropy(a, b);
    } else if (fn == "groe") {
        r = generalizedROE(a, b, need(c.lambda, "--lambda", fn));
    } else if (fn == "gen-tsallis") {
        if (!c.k) throw std::invalid_argument(fn + " requires --k");
        r = generalizedTsallisEntropy(a, b, need(c.mu, "--mu", fn), *c.k,
                                      need(c.lambda, "--lambda", fn));
    } else {
        throw std::invalid_argument("unknown functional: " + fn);
    }
    emit(matrixToJson(r).dump(2) + "\n", c.outPath, out);
    return 0;
}

void printSummary(const VerificationReport& report, std::ostream& out) {
    char line[160];
    std::snprintf(line, sizeof line, "%-28s %8s %8s %9s  %-13s %s\n", "suite", "trials", "passes",
                  "failures", "worst", "seed");
    out << line;
    for (const SuiteResult& s : report.suites) {
        std::snprintf(line, sizeof line, "%-28s %8ld %8ld %9ld  %-13.3e %llu\n", s.name.c_str(),
                      s.trials, s.passes, s.failures, s.worstViolation,
                      static_cast<unsigned long long>(s.worstInstanceSeed));
        out << line;
    }
    out << "overall: " << (report.overallPass ? "PASS" : "FAIL") << "\n";
}

} // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"matrix relative-entropy functionals and a property-based verification harness"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(0, 1);

    // compute ---------------------------------------------------------------
    ComputeArgs comp;
    CLI::App* compute = app.add_subcommand(
        "compute", "evaluate one functional on explicit inputs");
    compute
        ->add_option("functional", comp.functional,
                     "one of: tsallis-op, roe, groe, gen-tsallis, natural-power, "
                     "tsallis-scalar, dq, quantum-tsallis")
        ->required();
    compute->add_option("--a", comp.a, "first operand: JSON file path or inline JSON");
    compute->add_option("--b", comp.b, "second operand: JSON file path or inline JSON");
    compute->add_option("--lambda", comp.lambda, "deformation parameter");
    compute->add_option("--mu", comp.mu, "base offset (gen-tsallis)");
    compute->add_option("--k", comp.k, "ladder index (gen-tsallis)");
    compute->add_option("--q", comp.q, "divergence order (dq, quantum-tsallis)");
    compute->add_option("--out", comp.outPath, "write the result here instead of stdout");

    // verify ----------------------------------------------------------------
    std::string suite = "all";
    std::string dimsText, partText, lambdaGridText, muGridText;
    std::string verifyOut;
    TrialConfig cfg = TrialConfig::defaults();
    CLI::App* verifyCmd = app.add_subcommand("verify", "run verification suites");
    verifyCmd->add_option("--suite", suite,
                          "scalar, lemma21, theorem21, furuta, prop31, chains, summed, "
                          "all, or exploratory (default all)");
    verifyCmd->add_option("--trials", cfg.trials, "random trials per suite (default 500)");
    verifyCmd->add_option("--seed", cfg.seed, "master seed (default 42)");
    verifyCmd->add_option("--dims", dimsText, "matrix dimensions, e.g. 1..8 (default 1..8)");
    verifyCmd->add_option("--partition-sizes", partText,
                          "blocks per partition, e.g. 1..5 (default 1..5)");
    verifyCmd->add_option("--tol", cfg.tol, "relative tolerance (default 1e-9)");
    verifyCmd->add_option("--condition-cap", cfg.conditionCap,
                          "condition number cap for random instances (default 1e4)");
    verifyCmd->add_option("--threads", cfg.threads, "worker threads for trials (default 1)");
    verifyCmd->add_option("--lambda-grid", lambdaGridText,
                          "comma-separated lambda values in (0,1]");
    verifyCmd->add_option("--mu-grid", muGridText, "comma-separated mu values");
    verifyCmd->add_option("--k-max", cfg.kMax, "largest ladder index (default 3)");
    verifyCmd->add_option("--out", verifyOut, "write the JSON report here instead of stdout");

    // gen -------------------------------------------------------------------
    std::string genKind;
    int genDim = 2, genN = 2;
    std::uint64_t genSeed = 42;
    double genCap = 1e4;
    std::string genOut;
    CLI::App* gen = app.add_subcommand("gen", "generate random test inputs");
    gen->add_option("kind", genKind, "spd, partition, or probvec")->required();
    gen->add_option("--dim", genDim, "matrix dimension (default 2)");
    gen->add_option("--n", genN, "block / component count (default 2)");
    gen->add_option("--seed", genSeed, "seed (default 42)");
    gen->add_option("--condition-cap", genCap, "condition number cap (default 1e4)");
    gen->add_option("--out", genOut, "write the result here instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion& e) {
        out << kToolVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(compute)) return runCompute(comp, out);

        if (app.got_subcommand(verifyCmd)) {
            if (!dimsText.empty()) cfg.dims = parseRange(dimsText, "--dims");
            if (!partText.empty()) cfg.partitionSizes = parseRange(partText, "--partition-sizes");
            if (!lambdaGridText.empty()) cfg.lambdaGrid = parseGrid(lambdaGridText, "--lambda-grid");
            if (!muGridText.empty()) cfg.muGrid = parseGrid(muGridText, "--mu-grid");
            cfg.validate();

            const VerificationReport report = verify(suite, cfg);
            emit(reportToJson(report, cfg, suite).dump(2) + "\n", verifyOut, out);
            if (!verifyOut.empty()) {
                printSummary(report, out);
                out << "report written to " << verifyOut << "\n";
            }
            return report.overallPass ? 0 : 1;
        }

        if (app.got_subcommand(gen)) {
            if (genKind == "spd") {
                SplitRng rng(deriveTrialSeed(genSeed, kGenStreamSpd, 0));
                emit(matrixToJson(randomSPD(genDim, genCap, rng)).dump(2) + "\n", genOut, out);
            } else if (genKind == "partition") {
                SplitRng rng(deriveTrialSeed(genSeed, kGenStreamPartition, 0));
                emit(partitionToJson(randomPartition(genN, genDim, genCap, rng)).dump(2) + "\n",
                     genOut, out);
            } else if (genKind == "probvec") {
                SplitRng rng(deriveTrialSeed(genSeed, kGenStreamProbVec, 0));
                emit(probVectorToJson(randomProbVector(genN, rng)).dump() + "\n", genOut, out);
            } else {
                throw std::invalid_argument("unknown gen kind: " + genKind);
            }
            return 0;
        }

        err << app.help();
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace relent
