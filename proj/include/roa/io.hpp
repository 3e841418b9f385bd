#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "roa/dataset.hpp"
#include "roa/equilibrium_sets.hpp"
#include "roa/estimation.hpp"
#include "roa/sdp.hpp"
#include "roa/trajectory.hpp"

namespace roa {

using nlohmann::json;

json VectorToJson(const Eigen::VectorXd& v);
/// Throws std::invalid_argument unless `j` is an array of numbers.
Eigen::VectorXd VectorFromJson(const json& j);

/// Row-major nested arrays.
json MatrixToJson(const SymmetricMatrix& m);
/// Requires a square, exactly symmetric nested array.
SymmetricMatrix MatrixFromJson(const json& j);

json BasisToJson(const FeatureMap& features);
FeatureMap BasisFromJson(const json& j);

json EquilibriumSetToJson(const EquilibriumSet& set);
EquilibriumSet EquilibriumSetFromJson(const json& j);

/// One JSON object per line:
///   {"id","x0","label","dt","stride","samples","exit_time","target"}.
void WriteTrajectories(std::ostream& out, const std::vector<Trajectory>& batch);
std::vector<Trajectory> ReadTrajectories(std::istream& in);

json DatasetToJson(const RegressionDataset& dataset);
RegressionDataset DatasetFromJson(const json& j);

json SolutionToJson(const SdpSolution& solution);

/// Basis, P*, gamma*, eigenvalues and PSD diagnostics of P*, weight
/// function and provenance. Round-trips through EstimateFromJson.
json EstimateToJson(const LyapunovEstimate& estimate);
LyapunovEstimate EstimateFromJson(const json& j);

/// printf("%.17g"), with "nan", "inf" and "-inf" for non-finite values.
std::string FormatNumber(double v);

}  // namespace roa
