#pragma once

#include <array>
#include <string_view>

namespace pgraph {

/// One row per library operation: the subcommand that exercises it. The
/// coverage test asserts that every operation appears exactly once and that
/// every listed subcommand exists on the command line.
struct OpBinding {
    std::string_view op;
    std::string_view subcommand;
};

inline constexpr std::array<std::string_view, 11> kSubcommands = {
    "apply",   "energy",  "gsr",   "picone",    "capacity",   "null-seq",
    "harnack", "hardy",   "liouville", "ineq-scan", "model-check"};

inline constexpr std::array<OpBinding, 42> kOpRegistry = {{
    // graph construction and structure, surfaced by the operator report
    {"load_graph", "apply"},
    {"degree", "apply"},
    {"boundary", "apply"},
    {"is_connected", "apply"},
    {"phi_p", "apply"},
    {"gradient", "apply"},
    {"p_laplacian", "apply"},
    {"schroedinger_apply", "apply"},
    {"classify", "apply"},

    {"energy", "energy"},
    {"bracket", "energy"},

    {"gsr_check", "gsr"},
    {"simplified_energy", "gsr"},
    {"simplified_energy_1", "gsr"},
    {"simplified_energy_2", "gsr"},
    {"simplified_energy_3", "gsr"},
    {"corollary_bounds_check", "gsr"},

    {"picone_residual", "picone"},

    {"capacity", "capacity"},

    {"null_sequence_search", "null-seq"},
    {"ground_state_trend", "null-seq"},

    {"harnack_constant", "harnack"},
    {"harnack_verify", "harnack"},

    {"hardy_witness", "hardy"},
    {"proper_subset_check", "hardy"},

    {"liouville_check", "liouville"},

    {"ineq2_sides", "ineq-scan"},
    {"ineq1_check", "ineq-scan"},
    {"ineq34_check", "ineq-scan"},
    {"ineq5_check", "ineq-scan"},
    {"lindqvist_check", "ineq-scan"},
    {"constant_cp", "ineq-scan"},
    {"scan_equivalence", "ineq-scan"},

    // model construction and the window-level identities
    {"nat_line", "model-check"},
    {"int_line", "model-check"},
    {"grid2d", "model-check"},
    {"weighted_line", "model-check"},
    {"hardy_u", "model-check"},
    {"alpha_seq", "model-check"},
    {"gsr_display_check", "model-check"},
    {"greens_residual", "model-check"},
    {"gsr_criticality_transfer", "model-check"},
}};

}  // namespace pgraph
