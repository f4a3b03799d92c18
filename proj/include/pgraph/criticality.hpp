#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgraph/energy.hpp"
#include "pgraph/graph.hpp"
#include "pgraph/operators.hpp"

namespace pgraph {

struct CapacityOptions {
    double pin_value = 1.0;     // value pinned at the root
    int max_iterations = 200000;
    double grad_tol = 1e-9;     // stop: sup-norm of the free gradient
    double stall_rel = 1e-12;   // stop: relative energy decrease ...
    int stall_window = 50;      // ... over this many consecutive iterations
    int restarts = 8;           // extra seeded starts when not certified convex
    std::uint64_t seed = 20177;
};

enum class CapacityStatus { global_minimum, upper_bound };

struct CapacityResult {
    double value = 0.0;
    GraphFunction minimizer;          // pinned at the root, supported in V
    bool certified_convex = false;    // potential >= 0 on V
    CapacityStatus status = CapacityStatus::global_minimum;
    int iterations = 0;
    double grad_sup_norm = 0.0;
};

/// cap(x0, V) = inf { h(phi) : phi supported in V, phi(x0) = pin_value }.
/// Projected descent on the free coordinates with Barzilai-Borwein steps and
/// an Armijo backtracking safeguard (the gradient is merely Hoelder for
/// 1 < p < 2). The warm start is the graph-distance cone from x0, which is
/// already the exact minimizer on unweighted lines. With potential >= 0 on V
/// the problem is convex and the result is the global value; otherwise the
/// best of seeded restarts is reported as an upper bound. Requires p > 1,
/// x0 in V, V inside the interior.
[[nodiscard]] CapacityResult capacity(const WeightedGraph& g, VertexId x0, const VertexSet& V,
                                      const PExponent& p, const CapacityOptions& opts = {});

/// One window of an exhaustion, produced by a caller-supplied builder.
/// core lists the ids (in this window) of a label set shared by all radii,
/// in a fixed order, so functions can be compared across windows.
struct ExhaustionStep {
    WeightedGraph graph;
    VertexSet domain;   // support set for capacity (usually the interior)
    VertexId root = 0;
    std::vector<VertexId> core;
};

using StepBuilder = std::function<ExhaustionStep(int radius)>;

struct NullSequenceEvidence {
    std::vector<int> radii;
    std::vector<double> capacities;              // cap at the root, pin 1
    std::vector<double> energies;                // h(e_n), e_n = alpha |minimizer|
    std::vector<GraphFunction> minimizers;       // e_n per radius
    std::vector<std::vector<double>> core_values;  // e_n restricted to the core
    double alpha = 1.0;
    bool monotone_decreasing = false;
    double final_over_first = 0.0;
    double loglog_slope = 0.0;  // least-squares slope of log energy vs log radius
};

/// Runs the capacity problem across the exhaustion and assembles the null
/// sequence candidates e_n = alpha |minimizer| with their energies
/// (= alpha^p capacity; recomputed from the function, not assumed).
[[nodiscard]] NullSequenceEvidence null_sequence_search(const StepBuilder& build, double alpha,
                                                        const PExponent& p,
                                                        std::span<const int> radii,
                                                        const CapacityOptions& opts = {});

enum class CriticalityClass { subcritical_witness, critical_trend, inconclusive };

[[nodiscard]] const char* to_string(CriticalityClass c);

struct TrendThresholds {
    double final_ratio = 1e-3;  // final energy below this times the first ...
    double slope_max = -0.25;   // ... or log-log slope at most this
};

/// critical_trend iff the energies decrease monotonically and either decay
/// past final_ratio or fit a power law with slope <= slope_max; otherwise
/// inconclusive. (A slope near 0 is the signature of a positive capacity
/// floor; the closed-form decay on lines is radius^{1-p}.)
[[nodiscard]] CriticalityClass classify_trend(const NullSequenceEvidence& evidence,
                                              const TrendThresholds& thresholds = {});

struct CriticalityVerdict {
    CriticalityClass classification = CriticalityClass::inconclusive;
    NullSequenceEvidence evidence;
    std::optional<GraphFunction> hardy_weight;  // present for subcritical_witness
};

struct GroundStateTrend {
    std::vector<double> sup_deviation;  // per radius, over the core
    double scale = 0.0;                 // alpha / u(root)
};

/// Deviation of e_n from the normalized positive profile u on the shared
/// core: sup over core of |e_n - (alpha/u(root)) u|. u_core is aligned with
/// the evidence's core order; u values must be strictly positive.
[[nodiscard]] GroundStateTrend ground_state_trend(const NullSequenceEvidence& evidence,
                                                  std::span<const double> u_core,
                                                  double u_at_root);

/// Improved weight w = (H u) / u^{p-1} on V from a strictly positive
/// superharmonic (or harmonic) u; zero outside V. The mass inequality
/// h(phi) >= sum_V w |phi|^p m for phi supported in V is what the battery
/// tests verify. Throws when u fails classification or positivity on V
/// (u >= 0 suffices on the boundary; the half-line profile vanishes at 0).
[[nodiscard]] GraphFunction hardy_witness(const WeightedGraph& g, const GraphFunction& u,
                                          const VertexSet& V, const PExponent& p,
                                          double classify_tol = 0.0);

struct HarnackResult {
    double constant = 1.0;
    std::vector<VertexId> k_members;               // ascending ids
    std::vector<double> d_f;                       // deg + c - f m, aligned
    std::vector<std::vector<double>> pair_bound;   // [i][j] min path factor product
};

/// Harnack constant C on the finite connected K inside the interior:
/// directed step factor F(x -> y) = (d_f(x)/b(x,y))^{1/(p-1)} + 1, pairwise
/// bound = min over directed paths in K of the factor product (Dijkstra on
/// log factors, ascending-id tie break), constant = max over ordered pairs.
/// Requires p > 1 and d_f >= 0 on K.
[[nodiscard]] HarnackResult harnack_constant(const WeightedGraph& g, const VertexSet& K,
                                             const GraphFunction& f, const PExponent& p);

struct HarnackVerification {
    bool hypotheses_ok = false;  // u >= 0 on K and its boundary, H u >= f u^{p-1} on K
    bool holds = false;          // max u <= C min u on K (or the zero case)
    bool zero_case = false;      // u vanishes on K, hence on K and its boundary
    double constant = 1.0;
    double max_u = 0.0;
    double min_u = 0.0;
    std::string failure;         // empty when hypotheses_ok
};

/// Checks the supersolution hypotheses for (g, K, f, u) numerically, then the
/// multiplicative bound with the computed constant. A supersolution vanishing
/// anywhere on K must vanish on all of K and its boundary; that propagation
/// is verified rather than assumed.
[[nodiscard]] HarnackVerification harnack_verify(const WeightedGraph& g, const VertexSet& K,
                                                 const GraphFunction& f, const GraphFunction& u,
                                                 const PExponent& p, double tol = 1e-9);

struct SubcriticalFloor {
    VertexId probe = 0;       // boundary-adjacent vertex whose capacity is reported
    double capacity = 0.0;
    HarmonicityClass witness_class;
};

/// Positive-capacity check for a proper connected subset V with a strictly
/// positive witness u (on V and its boundary) superharmonic on V: reports
/// cap(probe, V) for a vertex of V adjacent to the complement. The capacity
/// stays bounded away from zero under window refinement; sweeping radii is
/// the caller's loop. Throws when V is not proper or the witness fails.
[[nodiscard]] SubcriticalFloor proper_subset_check(const WeightedGraph& g, const VertexSet& V,
                                                   const GraphFunction& u, const PExponent& p,
                                                   std::optional<VertexId> probe = {},
                                                   const CapacityOptions& opts = {});

/// One window of a paired comparison: base carries (b, c) with its domain and
/// root; graph_tilde shares the vertex set and measure. u is the ground-state
/// candidate for the base energy, u_tilde the positive subsolution candidate
/// for the tilde energy; superharmonic_tilde defaults to u_tilde (a harmonic
/// candidate serves as both).
struct LiouvilleStep {
    ExhaustionStep base;
    WeightedGraph graph_tilde;
    GraphFunction u;
    GraphFunction u_tilde;
    std::optional<GraphFunction> superharmonic_tilde;
};

using LiouvilleBuilder = std::function<LiouvilleStep(int radius)>;

struct LiouvilleReport {
    bool hypotheses_ok = false;
    std::string failed_hypothesis;  // "a".."d" with detail; empty when ok
    NullSequenceEvidence base_evidence;
    std::vector<double> transported_energies;  // tilde energy of u_tilde e_n / u
    CriticalityClass base_class = CriticalityClass::inconclusive;
    CriticalityClass transported_class = CriticalityClass::inconclusive;
    double alpha = 0.0;
    double beta = 0.0;
};

/// Criticality transfer between a pair of energies on the same vertex set.
/// Hypotheses, checked numerically on every window:
///   (a) the base energy shows a critical trend and u is strictly positive
///       and harmonic (its ground-state candidate);
///   (b) u_tilde is strictly positive and subharmonic for the tilde energy,
///       and a strictly positive superharmonic function exists for it;
///   (c) b^{2/p} u(x) u(y) >= alpha bt^{2/p} ut(x) ut(y) on every edge;
///   (d) b^{1/p} |grad u| >= beta bt^{1/p} |grad ut| on every edge for
///       p >= 2, with the reversed inequality for 1 < p < 2.
/// Conclusion checked: the transported sequence u_tilde e_n / u is a null
/// sequence for the tilde energy (its energies show the critical trend).
[[nodiscard]] LiouvilleReport liouville_check(const LiouvilleBuilder& build, double alpha,
                                              double beta, const PExponent& p,
                                              std::span<const int> radii,
                                              const TrendThresholds& thresholds = {},
                                              const CapacityOptions& opts = {},
                                              double hypothesis_tol = 1e-9);

struct TransferReport {
    NullSequenceEvidence base;
    NullSequenceEvidence transferred;
    CriticalityClass base_class = CriticalityClass::inconclusive;
    CriticalityClass transferred_class = CriticalityClass::inconclusive;
    std::vector<double> ones_deviation;  // transferred minimizers vs constant 1
    bool trends_match = false;
};

/// For p > 2 and a strictly positive harmonic u per window, compares the
/// criticality trend of the base energy with that of the pure-gradient
/// energy on the transformed weights b_u(x,y) = b(x,y) (u(x)u(y))^{p/2};
/// criticality transports and the constant function 1 takes over the ground
/// state role, which the deviation column tracks.
[[nodiscard]] TransferReport gsr_criticality_transfer(
    const StepBuilder& build, const std::function<GraphFunction(const ExhaustionStep&)>& make_u,
    const PExponent& p, std::span<const int> radii, const TrendThresholds& thresholds = {},
    const CapacityOptions& opts = {});

}  // namespace pgraph
