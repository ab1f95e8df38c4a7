// JSON serialization for the on-disk matrix format, partitions, probability
// vectors, and verification reports.
//
// Matrix files look like {"n": 2, "data": [[...], [...]]}.  On read, entries
// must be finite and symmetric within 1e-10 relative to the largest entry;
// the stored matrix is the exact symmetrization of the payload.  Doubles are
// serialized losslessly (write-then-read reproduces entries bit-exactly).
#pragma once

#include <string>

#include <json.hpp>

#include "relent/matrix.hpp"
#include "relent/random.hpp"
#include "relent/scalar_entropy.hpp"
#include "relent/verifier.hpp"

namespace relent {

nlohmann::json matrixToJson(const HermitianMatrix& m);
HermitianMatrix matrixFromJson(const nlohmann::json& j);

nlohmann::json probVectorToJson(const ProbVector& p);
ProbVector probVectorFromJson(const nlohmann::json& j);

nlohmann::json partitionToJson(const OperatorPartition& p);
OperatorPartition partitionFromJson(const nlohmann::json& j);

nlohmann::json configToJson(const TrialConfig& cfg, std::string_view suiteSelector);
nlohmann::json reportToJson(const VerificationReport& report, const TrialConfig& cfg,
                            std::string_view suiteSelector);

// File helpers; read errors and format violations throw std::runtime_error /
// std::invalid_argument with one-line messages.
HermitianMatrix readMatrixFile(const std::string& path);
nlohmann::json readJsonFile(const std::string& path);
void writeTextFile(const std::string& path, const std::string& text);

} // namespace relent
