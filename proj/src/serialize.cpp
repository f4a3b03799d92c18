#include "pgraph/serialize.hpp"

namespace pgraph {

using nlohmann::json;

void to_json(json& j, const EdgeTerm& v) {
    j = json{{"x", v.x}, {"y", v.y}, {"value", v.value}};
}

void to_json(json& j, const EnergyReport& v) {
    j = json{{"total", v.total},
             {"gradient_part", v.gradient_part},
             {"potential_part", v.potential_part}};
    if (v.edge_terms.has_value()) j["edge_terms"] = *v.edge_terms;
}

void to_json(json& j, const GsrReport& v) {
    j = json{{"lhs", v.lhs}, {"rhs", v.rhs}, {"ratio", v.ratio}, {"degenerate", v.degenerate}};
}

void to_json(json& j, const CorollaryBounds& v) {
    j = json{{"holds", v.holds},
             {"lhs", v.lhs},
             {"h_u1", v.h_u1},
             {"h_u2", v.h_u2},
             {"constant", v.constant},
             {"slack", v.slack},
             {"ratio_h12", v.ratio_h12},
             {"equality_gap", v.equality_gap}};
}

void to_json(json& j, const HarmonicityClass& v) {
    j = json{{"kind", to_string(v.kind)},
             {"tolerance", v.tolerance},
             {"max_value", v.max_value},
             {"min_value", v.min_value}};
}

void to_json(json& j, const InequalityPoint& v) { j = json{{"a", v.a}, {"t", v.t}}; }

void to_json(json& j, const Ineq1Result& v) {
    j = json{{"value", v.value},
             {"bracket", v.bracket},
             {"upper_holds", v.upper_holds},
             {"lower_holds", v.lower_holds}};
}

void to_json(json& j, const Ineq34Result& v) {
    j = json{{"holds", v.holds}, {"lhs", v.lhs}, {"rhs", v.rhs}};
}

void to_json(json& j, const Ineq5Result& v) {
    j = json{{"upper_holds", v.upper_holds},
             {"lower_holds", v.lower_holds},
             {"upper_constant", v.upper_constant},
             {"lower_constant", v.lower_constant},
             {"sum_of_powers", v.sum_of_powers},
             {"power_of_sum", v.power_of_sum}};
}

void to_json(json& j, const LindqvistResult& v) {
    j = json{{"holds", v.holds}, {"slack", v.slack}, {"constant", v.constant}};
}

void to_json(json& j, const GridSpec& v) {
    j = json{{"a_min", v.a_min}, {"a_max", v.a_max}, {"a_step", v.a_step},
             {"t_min", v.t_min}, {"t_max", v.t_max}, {"t_step", v.t_step}};
}

void to_json(json& j, const ScanResult& v) {
    j = json{{"inf_ratio", v.inf_ratio},
             {"sup_ratio", v.sup_ratio},
             {"argmin", v.argmin},
             {"argmax", v.argmax},
             {"points_scanned", v.points_scanned},
             {"points_excluded", v.points_excluded},
             {"grid", v.grid}};
}

void to_json(json& j, const CapacityResult& v) {
    j = json{{"value", v.value},
             {"minimizer", v.minimizer},
             {"certified_convex", v.certified_convex},
             {"status", v.status == CapacityStatus::global_minimum ? "global_minimum"
                                                                   : "upper_bound"},
             {"iterations", v.iterations},
             {"grad_sup_norm", v.grad_sup_norm}};
}

void to_json(json& j, const NullSequenceEvidence& v) {
    j = json{{"radii", v.radii},
             {"capacities", v.capacities},
             {"energies", v.energies},
             {"core_values", v.core_values},
             {"alpha", v.alpha},
             {"monotone_decreasing", v.monotone_decreasing},
             {"final_over_first", v.final_over_first},
             {"loglog_slope", v.loglog_slope}};
}

void to_json(json& j, const GroundStateTrend& v) {
    j = json{{"sup_deviation", v.sup_deviation}, {"scale", v.scale}};
}

void to_json(json& j, const HarnackResult& v) {
    j = json{{"constant", v.constant},
             {"k_members", v.k_members},
             {"d_f", v.d_f},
             {"pair_bound", v.pair_bound}};
}

void to_json(json& j, const HarnackVerification& v) {
    j = json{{"hypotheses_ok", v.hypotheses_ok},
             {"holds", v.holds},
             {"zero_case", v.zero_case},
             {"constant", v.constant},
             {"max_u", v.max_u},
             {"min_u", v.min_u},
             {"failure", v.failure}};
}

void to_json(json& j, const SubcriticalFloor& v) {
    j = json{{"probe", v.probe}, {"capacity", v.capacity}, {"witness_class", v.witness_class}};
}

void to_json(json& j, const LiouvilleReport& v) {
    j = json{{"hypotheses_ok", v.hypotheses_ok},
             {"failed_hypothesis", v.failed_hypothesis},
             {"base_evidence", v.base_evidence},
             {"transported_energies", v.transported_energies},
             {"base_class", to_string(v.base_class)},
             {"transported_class", to_string(v.transported_class)},
             {"alpha", v.alpha},
             {"beta", v.beta}};
}

void to_json(json& j, const TransferReport& v) {
    j = json{{"base", v.base},
             {"transferred", v.transferred},
             {"base_class", to_string(v.base_class)},
             {"transferred_class", to_string(v.transferred_class)},
             {"ones_deviation", v.ones_deviation},
             {"trends_match", v.trends_match}};
}

namespace models {

void to_json(json& j, const DisplayCheck& v) {
    j = json{{"lhs", v.lhs}, {"rhs", v.rhs}, {"ratio", v.ratio}, {"degenerate", v.degenerate}};
}

}  // namespace models

}  // namespace pgraph
