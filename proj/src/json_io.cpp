#include "relent/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "relent/version.hpp"

namespace relent {

using nlohmann::json;

namespace {

constexpr double kSymmetryTol = 1e-10;

} // namespace

json matrixToJson(const HermitianMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"n", m.dim()}, {"data", std::move(rows)}};
}

HermitianMatrix matrixFromJson(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("data"))
        throw std::invalid_argument("matrix file must be an object with \"n\" and \"data\"");
    if (!j["n"].is_number_integer() || j["n"].get<long>() < 1)
        throw std::invalid_argument("matrix file: \"n\" must be a positive integer");
    const int n = j["n"].get<int>();
    const json& data = j["data"];
    if (!data.is_array() || data.size() != static_cast<size_t>(n))
        throw std::invalid_argument("matrix file: \"data\" must be an array of n rows");

    std::vector<double> entries;
    entries.reserve(static_cast<size_t>(n) * n);
    for (const json& row : data) {
        if (!row.is_array() || row.size() != static_cast<size_t>(n))
            throw std::invalid_argument("matrix file: each row must have n entries");
        for (const json& v : row) {
            if (!v.is_number())
                throw std::invalid_argument("matrix file: entries must be numbers");
            const double x = v.get<double>();
            if (!std::isfinite(x))
                throw std::invalid_argument("matrix file: entries must be finite");
            entries.push_back(x);
        }
    }

    double maxAbs = 0.0;
    for (double v : entries) maxAbs = std::max(maxAbs, std::abs(v));
    for (int i = 0; i < n; ++i)
        for (int jx = i + 1; jx < n; ++jx) {
            const double d = std::abs(entries[static_cast<size_t>(i) * n + jx] -
                                      entries[static_cast<size_t>(jx) * n + i]);
            if (d > kSymmetryTol * (1.0 + maxAbs))
                throw std::invalid_argument("matrix file: data not symmetric within 1e-10 relative");
        }
    return HermitianMatrix(n, std::move(entries));
}

json probVectorToJson(const ProbVector& p) {
    json arr = json::array();
    for (int i = 0; i < p.size(); ++i) arr.push_back(p[i]);
    return arr;
}

ProbVector probVectorFromJson(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("probability vector must be a non-empty JSON array");
    std::vector<double> v;
    v.reserve(j.size());
    for (const json& x : j) {
        if (!x.is_number())
            throw std::invalid_argument("probability vector entries must be numbers");
        v.push_back(x.get<double>());
    }
    return ProbVector(std::move(v));
}

json partitionToJson(const OperatorPartition& p) {
    json blocks = json::array();
    for (int jx = 0; jx < p.size(); ++jx) blocks.push_back(matrixToJson(p.block(jx)));
    return json{{"kind", "partition"}, {"count", p.size()}, {"dim", p.dim()},
                {"blocks", std::move(blocks)}};
}

OperatorPartition partitionFromJson(const json& j) {
    if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array())
        throw std::invalid_argument("partition file must be an object with a \"blocks\" array");
    std::vector<HermitianMatrix> blocks;
    for (const json& b : j["blocks"]) blocks.push_back(matrixFromJson(b));
    return OperatorPartition(std::move(blocks));
}

json configToJson(const TrialConfig& cfg, std::string_view suiteSelector) {
    return json{{"seed", cfg.seed},
                {"trials", cfg.trials},
                {"dims", {{"min", cfg.dims.lo}, {"max", cfg.dims.hi}}},
                {"partitionSizes", {{"min", cfg.partitionSizes.lo}, {"max", cfg.partitionSizes.hi}}},
                {"lambdaGrid", cfg.lambdaGrid},
                {"limitLambdas", cfg.limitLambdas},
                {"muGrid", cfg.muGrid},
                {"kMax", cfg.kMax},
                {"tol", cfg.tol},
                {"crossCheckTol", cfg.crossCheckTol},
                {"conditionCap", cfg.conditionCap},
                {"threads", cfg.threads},
                {"suite", std::string(suiteSelector)}};
}

json reportToJson(const VerificationReport& report, const TrialConfig& cfg,
                  std::string_view suiteSelector) {
    json suites = json::array();
    for (const SuiteResult& s : report.suites) {
        json e{{"name", s.name},
               {"trials", s.trials},
               {"passes", s.passes},
               {"failures", s.failures},
               {"worstViolation", s.worstViolation},
               {"worstInstanceSeed", s.worstInstanceSeed}};
        if (s.excludedFromOverall) e["excludedFromOverall"] = true;
        if (!s.notes.empty()) e["notes"] = s.notes;
        suites.push_back(std::move(e));
    }
    return json{{"toolVersion", kToolVersion},
                {"config", configToJson(cfg, suiteSelector)},
                {"suites", std::move(suites)},
                {"overallPass", report.overallPass}};
}

HermitianMatrix readMatrixFile(const std::string& path) {
    return matrixFromJson(readJsonFile(path));
}

json readJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void writeTextFile(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace relent
