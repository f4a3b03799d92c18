#pragma once

#include <json.hpp>

#include "pgraph/criticality.hpp"
#include "pgraph/energy.hpp"
#include "pgraph/inequalities.hpp"
#include "pgraph/models.hpp"
#include "pgraph/operators.hpp"

// JSON views of every report type the command line emits. Object keys are
// alphabetical (nlohmann's default ordering), so a report is byte-stable for
// identical inputs. Non-finite numbers serialize as null.

namespace pgraph {

void to_json(nlohmann::json& j, const EdgeTerm& v);
void to_json(nlohmann::json& j, const EnergyReport& v);
void to_json(nlohmann::json& j, const GsrReport& v);
void to_json(nlohmann::json& j, const CorollaryBounds& v);
void to_json(nlohmann::json& j, const HarmonicityClass& v);
void to_json(nlohmann::json& j, const InequalityPoint& v);
void to_json(nlohmann::json& j, const Ineq1Result& v);
void to_json(nlohmann::json& j, const Ineq34Result& v);
void to_json(nlohmann::json& j, const Ineq5Result& v);
void to_json(nlohmann::json& j, const LindqvistResult& v);
void to_json(nlohmann::json& j, const GridSpec& v);
void to_json(nlohmann::json& j, const ScanResult& v);
void to_json(nlohmann::json& j, const CapacityResult& v);
void to_json(nlohmann::json& j, const NullSequenceEvidence& v);
void to_json(nlohmann::json& j, const GroundStateTrend& v);
void to_json(nlohmann::json& j, const HarnackResult& v);
void to_json(nlohmann::json& j, const HarnackVerification& v);
void to_json(nlohmann::json& j, const SubcriticalFloor& v);
void to_json(nlohmann::json& j, const LiouvilleReport& v);
void to_json(nlohmann::json& j, const TransferReport& v);

namespace models {

void to_json(nlohmann::json& j, const DisplayCheck& v);

}  // namespace models

}  // namespace pgraph
