#include "pgraph/criticality.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "pgraph/numeric.hpp"

namespace pgraph {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Capacity objective restricted to the coordinates that can move. Inner
/// loops use plain accumulation for speed; reported values are recomputed
/// with the deterministic pairwise reduction at the end.
struct CapacityProblem {
    const WeightedGraph& g;
    double pv;
    std::vector<VertexId> free_ids;
    std::vector<EdgeRecord> active_edges;  // at least one endpoint in V
    std::vector<VertexId> potential_ids;   // V members with c != 0

    double value(const GraphFunction& phi) const {
        double s = 0.0;
        for (const EdgeRecord& e : active_edges)
            s += e.b * std::pow(std::abs(phi[static_cast<std::size_t>(e.x)] -
                                         phi[static_cast<std::size_t>(e.y)]),
                                pv);
        for (VertexId x : potential_ids)
            s += g.potential(x) * std::pow(std::abs(phi[static_cast<std::size_t>(x)]), pv);
        return s;
    }

    void gradient(const GraphFunction& phi, std::vector<double>& out) const {
        const PExponent p(pv);
        out.assign(free_ids.size(), 0.0);
        for (std::size_t i = 0; i < free_ids.size(); ++i) {
            const VertexId z = free_ids[i];
            double s = 0.0;
            for (const Neighbor& nb : g.neighbors(z))
                s += nb.weight * phi_p(phi[static_cast<std::size_t>(z)] -
                                           phi[static_cast<std::size_t>(nb.id)],
                                       p);
            s += g.potential(z) * phi_p(phi[static_cast<std::size_t>(z)], p);
            out[i] = pv * s;
        }
    }
};

double sup_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s = std::max(s, std::abs(x));
    return s;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Graph-distance cone from the root through V: exact minimizer on
/// unweighted lines, a sane start everywhere else.
GraphFunction cone_start(const WeightedGraph& g, VertexId x0, const VertexSet& V, double pin) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<VertexId> queue{x0};
    dist[static_cast<std::size_t>(x0)] = 0;
    int max_dist = 0;
    while (!queue.empty()) {
        const VertexId x = queue.front();
        queue.pop_front();
        for (const Neighbor& nb : g.neighbors(x)) {
            if (!V.contains(nb.id) || dist[static_cast<std::size_t>(nb.id)] >= 0) continue;
            dist[static_cast<std::size_t>(nb.id)] = dist[static_cast<std::size_t>(x)] + 1;
            max_dist = std::max(max_dist, dist[static_cast<std::size_t>(nb.id)]);
            queue.push_back(nb.id);
        }
    }
    const double reach = static_cast<double>(max_dist + 1);
    GraphFunction phi(static_cast<std::size_t>(g.vertex_count()), 0.0);
    for (int x = 0; x < g.vertex_count(); ++x)
        if (dist[static_cast<std::size_t>(x)] >= 0)
            phi[static_cast<std::size_t>(x)] =
                pin * (1.0 - static_cast<double>(dist[static_cast<std::size_t>(x)]) / reach);
    phi[static_cast<std::size_t>(x0)] = pin;
    return phi;
}

struct DescentOutcome {
    GraphFunction phi;
    double value = kInf;
    int iterations = 0;
};

DescentOutcome descend(const CapacityProblem& prob, GraphFunction phi,
                       const CapacityOptions& opts) {
    DescentOutcome out;
    const std::size_t nfree = prob.free_ids.size();
    if (nfree == 0) {
        out.phi = std::move(phi);
        out.value = prob.value(out.phi);
        return out;
    }

    std::vector<double> grad(nfree), grad_new(nfree);
    double fx = prob.value(phi);
    prob.gradient(phi, grad);
    double step = 1.0 / std::max(1e-12, sup_norm(grad));
    std::deque<double> history{fx};
    GraphFunction trial = phi;

    int it = 0;
    for (; it < opts.max_iterations; ++it) {
        const double gsup = sup_norm(grad);
        if (gsup < opts.grad_tol) break;

        const double gg = dot(grad, grad);
        double t = step;
        double ft = kInf;
        bool accepted = false;
        for (int bt = 0; bt < 60; ++bt) {
            for (std::size_t i = 0; i < nfree; ++i)
                trial[static_cast<std::size_t>(prob.free_ids[i])] =
                    phi[static_cast<std::size_t>(prob.free_ids[i])] - t * grad[i];
            ft = prob.value(trial);
            if (ft <= fx - 1e-4 * t * gg) {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) break;  // at the numerical decrease floor

        prob.gradient(trial, grad_new);
        // Barzilai-Borwein step from s = -t g, y = g_new - g.
        double sy = 0.0, ss = 0.0;
        for (std::size_t i = 0; i < nfree; ++i) {
            const double si = -t * grad[i];
            const double yi = grad_new[i] - grad[i];
            sy += si * yi;
            ss += si * si;
        }
        step = sy > 1e-300 ? std::clamp(ss / sy, 1e-14, 1e14) : std::min(t * 2.0, 1e14);

        phi.swap(trial);
        trial = phi;
        grad.swap(grad_new);
        fx = ft;

        history.push_back(fx);
        if (static_cast<int>(history.size()) > opts.stall_window + 1) history.pop_front();
        if (static_cast<int>(history.size()) == opts.stall_window + 1 &&
            history.front() - fx <= opts.stall_rel * std::max(1.0, std::abs(fx)))
            break;
    }

    out.phi = std::move(phi);
    out.value = fx;
    out.iterations = it;
    return out;
}

}  // namespace

CapacityResult capacity(const WeightedGraph& g, VertexId x0, const VertexSet& V,
                        const PExponent& p, const CapacityOptions& opts) {
    p.require_greater_than_one("capacity");
    require_subset_universe(g, V, "capacity");
    if (!V.contains(x0))
        throw std::invalid_argument("capacity: root " + std::to_string(x0) + " is not in V");
    for (VertexId x : V.members())
        if (!g.interior().contains(x))
            throw std::invalid_argument("capacity: V contains non-interior vertex " +
                                        std::to_string(x));

    CapacityProblem prob{g, p.value(), {}, {}, {}};
    for (VertexId x : V.members()) {
        if (x != x0) prob.free_ids.push_back(x);
        if (g.potential(x) != 0.0) prob.potential_ids.push_back(x);
    }
    for (const EdgeRecord& e : g.edges())
        if (V.contains(e.x) || V.contains(e.y)) prob.active_edges.push_back(e);

    CapacityResult result;
    result.certified_convex = true;
    for (VertexId x : V.members())
        if (g.potential(x) < 0.0) result.certified_convex = false;
    result.status =
        result.certified_convex ? CapacityStatus::global_minimum : CapacityStatus::upper_bound;

    DescentOutcome best = descend(prob, cone_start(g, x0, V, opts.pin_value), opts);
    int iterations = best.iterations;
    if (!result.certified_convex) {
        SplitMix64 rng(opts.seed);
        for (int r = 0; r < opts.restarts; ++r) {
            GraphFunction start(static_cast<std::size_t>(g.vertex_count()), 0.0);
            start[static_cast<std::size_t>(x0)] = opts.pin_value;
            for (VertexId z : prob.free_ids)
                start[static_cast<std::size_t>(z)] = rng.next_in(-1.0, 1.0);
            DescentOutcome cand = descend(prob, std::move(start), opts);
            iterations += cand.iterations;
            if (cand.value < best.value) best = std::move(cand);
        }
    }

    result.minimizer = std::move(best.phi);
    result.iterations = iterations;
    // Reported value uses the deterministic reduction, not the solver loop sum.
    result.value = energy(g, result.minimizer, p).total;
    std::vector<double> grad;
    prob.gradient(result.minimizer, grad);
    result.grad_sup_norm = sup_norm(grad);
    return result;
}

namespace {

struct TrendStats {
    bool monotone = false;
    double final_over_first = 0.0;
    double slope = 0.0;
};

TrendStats trend_stats(std::span<const int> radii, std::span<const double> energies) {
    TrendStats s;
    if (energies.empty()) return s;
    s.monotone = true;
    for (std::size_t k = 0; k + 1 < energies.size(); ++k)
        if (energies[k + 1] > energies[k] * (1.0 + 1e-9)) s.monotone = false;
    const double first = std::abs(energies.front());
    s.final_over_first = first > 0.0 ? energies.back() / first : 0.0;

    // Least-squares slope of log energy against log radius.
    const std::size_t n = energies.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        mx += std::log(static_cast<double>(radii[k]));
        my += std::log(std::max(energies[k], 1e-300));
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double dx = std::log(static_cast<double>(radii[k])) - mx;
        const double dy = std::log(std::max(energies[k], 1e-300)) - my;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    s.slope = sxx > 0.0 ? sxy / sxx : 0.0;
    return s;
}

CriticalityClass classify_stats(const TrendStats& s, const TrendThresholds& thresholds) {
    if (s.monotone && (s.final_over_first <= thresholds.final_ratio || s.slope <= thresholds.slope_max))
        return CriticalityClass::critical_trend;
    return CriticalityClass::inconclusive;
}

}  // namespace

NullSequenceEvidence null_sequence_search(const StepBuilder& build, double alpha,
                                          const PExponent& p, std::span<const int> radii,
                                          const CapacityOptions& opts) {
    p.require_greater_than_one("null_sequence_search");
    if (radii.empty()) throw std::invalid_argument("null_sequence_search: empty radius list");
    if (!(alpha > 0.0)) throw std::invalid_argument("null_sequence_search: alpha must be > 0");

    NullSequenceEvidence ev;
    ev.alpha = alpha;
    CapacityOptions copts = opts;
    copts.pin_value = 1.0;
    for (int r : radii) {
        const ExhaustionStep step = build(r);
        const CapacityResult cap = capacity(step.graph, step.root, step.domain, p, copts);
        GraphFunction e(cap.minimizer.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = alpha * std::abs(cap.minimizer[i]);
        ev.radii.push_back(r);
        ev.capacities.push_back(cap.value);
        ev.energies.push_back(energy(step.graph, e, p).total);
        std::vector<double> core(step.core.size());
        for (std::size_t i = 0; i < step.core.size(); ++i)
            core[i] = e[static_cast<std::size_t>(step.core[i])];
        ev.core_values.push_back(std::move(core));
        ev.minimizers.push_back(std::move(e));
    }
    const TrendStats s = trend_stats(ev.radii, ev.energies);
    ev.monotone_decreasing = s.monotone;
    ev.final_over_first = s.final_over_first;
    ev.loglog_slope = s.slope;
    return ev;
}

const char* to_string(CriticalityClass c) {
    switch (c) {
        case CriticalityClass::subcritical_witness: return "subcritical_witness";
        case CriticalityClass::critical_trend: return "critical_trend";
        case CriticalityClass::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

CriticalityClass classify_trend(const NullSequenceEvidence& evidence,
                                const TrendThresholds& thresholds) {
    TrendStats s;
    s.monotone = evidence.monotone_decreasing;
    s.final_over_first = evidence.final_over_first;
    s.slope = evidence.loglog_slope;
    return classify_stats(s, thresholds);
}

GroundStateTrend ground_state_trend(const NullSequenceEvidence& evidence,
                                    std::span<const double> u_core, double u_at_root) {
    if (!(u_at_root > 0.0))
        throw std::invalid_argument("ground_state_trend: u must be positive at the root");
    for (double v : u_core)
        if (!(v > 0.0))
            throw std::invalid_argument("ground_state_trend: u must be positive on the core");
    GroundStateTrend out;
    out.scale = evidence.alpha / u_at_root;
    out.sup_deviation.reserve(evidence.core_values.size());
    for (const auto& core : evidence.core_values) {
        if (core.size() != u_core.size())
            throw std::invalid_argument("ground_state_trend: core size mismatch");
        double dev = 0.0;
        for (std::size_t i = 0; i < core.size(); ++i)
            dev = std::max(dev, std::abs(core[i] - out.scale * u_core[i]));
        out.sup_deviation.push_back(dev);
    }
    return out;
}

GraphFunction hardy_witness(const WeightedGraph& g, const GraphFunction& u, const VertexSet& V,
                            const PExponent& p, double classify_tol) {
    p.require_greater_than_one("hardy_witness");
    require_function_size(g, u, "hardy_witness");
    require_subset_universe(g, V, "hardy_witness");
    for (VertexId x : V.members())
        if (!(u[static_cast<std::size_t>(x)] > 0.0))
            throw std::invalid_argument("hardy_witness: u must be strictly positive on V, got " +
                                        std::to_string(u[static_cast<std::size_t>(x)]) +
                                        " at vertex " + std::to_string(x));
    for (VertexId x : g.boundary(V).members())
        if (!(u[static_cast<std::size_t>(x)] >= 0.0))
            throw std::invalid_argument(
                "hardy_witness: u must be nonnegative on the boundary of V, got " +
                std::to_string(u[static_cast<std::size_t>(x)]) + " at vertex " + std::to_string(x));

    const HarmonicityClass cls = classify(g, u, V, p, classify_tol);
    if (cls.kind != Harmonicity::superharmonic && cls.kind != Harmonicity::harmonic)
        throw std::invalid_argument(std::string("hardy_witness: u is not superharmonic on V "
                                                "(classification: ") +
                                    to_string(cls.kind) + ")");

    GraphFunction w(u.size(), 0.0);
    for (VertexId x : V.members())
        w[static_cast<std::size_t>(x)] =
            schroedinger_at(g, u, x, p) /
            std::pow(u[static_cast<std::size_t>(x)], p.value() - 1.0);
    return w;
}

HarnackResult harnack_constant(const WeightedGraph& g, const VertexSet& K, const GraphFunction& f,
                               const PExponent& p) {
    p.require_greater_than_one("harnack_constant");
    require_subset_universe(g, K, "harnack_constant");
    require_function_size(g, f, "harnack_constant");
    if (K.empty()) throw std::invalid_argument("harnack_constant: K is empty");
    for (VertexId x : K.members())
        if (!g.interior().contains(x))
            throw std::invalid_argument("harnack_constant: K contains non-interior vertex " +
                                        std::to_string(x));
    if (!g.is_connected(K))
        throw std::invalid_argument("harnack_constant: K is not connected within itself");

    HarnackResult out;
    out.k_members = K.members();
    const std::size_t n = out.k_members.size();
    std::vector<int> slot(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < n; ++i) slot[static_cast<std::size_t>(out.k_members[i])] = static_cast<int>(i);

    out.d_f.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const VertexId x = out.k_members[i];
        const double d = g.degree(x) + g.potential(x) - f[static_cast<std::size_t>(x)] * g.measure(x);
        if (d < -1e-12 * (1.0 + g.degree(x)))
            throw std::invalid_argument("harnack_constant: deg + c - f m is negative at vertex " +
                                        std::to_string(x) + " (no positive supersolution exists)");
        out.d_f[i] = std::max(d, 0.0);
    }

    // Directed log-factor lengths; Dijkstra per source. Ties resolve to the
    // earliest (lowest-id) candidate because scanning is in ascending order.
    const double inv = 1.0 / (p.value() - 1.0);
    out.pair_bound.assign(n, std::vector<double>(n, kInf));
    for (std::size_t src = 0; src < n; ++src) {
        std::vector<double> dist(n, kInf);
        std::vector<char> done(n, 0);
        dist[src] = 0.0;
        for (std::size_t round = 0; round < n; ++round) {
            std::size_t u = n;
            for (std::size_t i = 0; i < n; ++i)
                if (!done[i] && dist[i] < (u == n ? kInf : dist[u])) u = i;
            if (u == n) break;
            done[u] = 1;
            const VertexId x = out.k_members[u];
            for (const Neighbor& nb : g.neighbors(x)) {
                const int j = slot[static_cast<std::size_t>(nb.id)];
                if (j < 0 || done[static_cast<std::size_t>(j)]) continue;
                const double factor = std::pow(out.d_f[u] / nb.weight, inv) + 1.0;
                const double cand = dist[u] + std::log(factor);
                if (cand < dist[static_cast<std::size_t>(j)]) dist[static_cast<std::size_t>(j)] = cand;
            }
        }
        for (std::size_t j = 0; j < n; ++j) out.pair_bound[src][j] = std::exp(dist[j]);
    }

    out.constant = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) out.constant = std::max(out.constant, out.pair_bound[i][j]);
    return out;
}

HarnackVerification harnack_verify(const WeightedGraph& g, const VertexSet& K,
                                   const GraphFunction& f, const GraphFunction& u,
                                   const PExponent& p, double tol) {
    require_function_size(g, u, "harnack_verify");
    HarnackVerification out;

    HarnackResult hc;
    try {
        hc = harnack_constant(g, K, f, p);
    } catch (const std::invalid_argument& e) {
        out.failure = e.what();
        return out;
    }
    out.constant = hc.constant;

    const VertexSet closure = [&] {
        VertexSet s = K;
        for (VertexId x : g.boundary(K).members()) s.insert(x);
        return s;
    }();

    double umax_closure = 0.0;
    for (VertexId x : closure.members())
        umax_closure = std::max(umax_closure, std::abs(u[static_cast<std::size_t>(x)]));
    const double uscale = 1.0 + umax_closure;
    for (VertexId x : closure.members())
        if (u[static_cast<std::size_t>(x)] < -tol * uscale) {
            out.failure = "u is negative at vertex " + std::to_string(x);
            return out;
        }
    for (VertexId x : K.members()) {
        const double hu = schroedinger_at(g, u, x, p);
        const double rhs = f[static_cast<std::size_t>(x)] * phi_p(u[static_cast<std::size_t>(x)], p);
        if (hu < rhs - tol * (1.0 + std::abs(hu) + std::abs(rhs))) {
            out.failure = "H u < f u^{p-1} at vertex " + std::to_string(x);
            return out;
        }
    }
    out.hypotheses_ok = true;

    out.max_u = -kInf;
    out.min_u = kInf;
    for (VertexId x : K.members()) {
        out.max_u = std::max(out.max_u, u[static_cast<std::size_t>(x)]);
        out.min_u = std::min(out.min_u, u[static_cast<std::size_t>(x)]);
    }

    const double ztol = 1e-12 * uscale;
    if (out.min_u <= ztol) {
        out.zero_case = true;
        // A verified supersolution vanishing on K must vanish on the closure.
        out.holds = umax_closure <= ztol;
        return out;
    }
    out.holds = out.max_u <= out.constant * out.min_u * (1.0 + 1e-9);
    return out;
}

SubcriticalFloor proper_subset_check(const WeightedGraph& g, const VertexSet& V,
                                     const GraphFunction& u, const PExponent& p,
                                     std::optional<VertexId> probe, const CapacityOptions& opts) {
    p.require_greater_than_one("proper_subset_check");
    require_subset_universe(g, V, "proper_subset_check");
    require_function_size(g, u, "proper_subset_check");
    if (V.empty()) throw std::invalid_argument("proper_subset_check: V is empty");
    const VertexSet bd = g.boundary(V);
    if (bd.empty())
        throw std::invalid_argument(
            "proper_subset_check: V has no boundary; it must be a proper subset reaching the rest "
            "of the graph");
    if (!g.is_connected(V))
        throw std::invalid_argument("proper_subset_check: V is not connected");

    for (VertexId x : V.members())
        if (!(u[static_cast<std::size_t>(x)] > 0.0))
            throw std::invalid_argument("proper_subset_check: witness must be positive on V");
    for (VertexId x : bd.members())
        if (!(u[static_cast<std::size_t>(x)] > 0.0))
            throw std::invalid_argument(
                "proper_subset_check: witness must be positive on the boundary of V");

    SubcriticalFloor out;
    out.witness_class = classify(g, u, V, p);
    if (out.witness_class.kind != Harmonicity::superharmonic &&
        out.witness_class.kind != Harmonicity::harmonic)
        throw std::invalid_argument(
            std::string("proper_subset_check: witness is not superharmonic on V "
                        "(classification: ") +
            to_string(out.witness_class.kind) + ")");

    if (probe.has_value()) {
        out.probe = *probe;
        bool touches = false;
        for (const Neighbor& nb : g.neighbors(out.probe))
            if (!V.contains(nb.id)) touches = true;
        if (!V.contains(out.probe) || !touches)
            throw std::invalid_argument("proper_subset_check: probe must lie in V and touch its "
                                        "complement");
    } else {
        out.probe = -1;
        for (VertexId x : V.members()) {
            for (const Neighbor& nb : g.neighbors(x))
                if (!V.contains(nb.id)) {
                    out.probe = x;
                    break;
                }
            if (out.probe >= 0) break;
        }
    }

    out.capacity = capacity(g, out.probe, V, p, opts).value;
    return out;
}

namespace {

bool positive_everywhere(const GraphFunction& f) {
    for (double v : f)
        if (!(v > 0.0)) return false;
    return true;
}

}  // namespace

LiouvilleReport liouville_check(const LiouvilleBuilder& build, double alpha, double beta,
                                const PExponent& p, std::span<const int> radii,
                                const TrendThresholds& thresholds, const CapacityOptions& opts,
                                double hypothesis_tol) {
    p.require_greater_than_one("liouville_check");
    if (radii.empty()) throw std::invalid_argument("liouville_check: empty radius list");
    LiouvilleReport report;
    report.alpha = alpha;
    report.beta = beta;

    bool transport_possible = true;
    std::string failed;

    for (int r : radii) {
        const LiouvilleStep step = build(r);
        const WeightedGraph& gb = step.base.graph;
        const WeightedGraph& gt = step.graph_tilde;
        if (gb.vertex_count() != gt.vertex_count())
            throw std::invalid_argument("liouville_check: paired graphs differ in vertex count");
        for (int x = 0; x < gb.vertex_count(); ++x)
            if (gb.measure(x) != gt.measure(x))
                throw std::invalid_argument("liouville_check: paired graphs differ in measure at " +
                                            std::to_string(x));
        require_function_size(gb, step.u, "liouville_check");
        require_function_size(gt, step.u_tilde, "liouville_check");

        if (!positive_everywhere(step.u)) {
            transport_possible = false;
            if (failed.empty()) failed = "a: u is not strictly positive on radius " + std::to_string(r);
        } else if (classify(gb, step.u, step.base.domain, p).kind != Harmonicity::harmonic) {
            if (failed.empty())
                failed = "a: u is not harmonic for the base energy on radius " + std::to_string(r);
        }

        if (!positive_everywhere(step.u_tilde)) {
            transport_possible = false;
            if (failed.empty())
                failed = "b: u_tilde is not strictly positive on radius " + std::to_string(r);
        } else {
            const Harmonicity sub = classify(gt, step.u_tilde, step.base.domain, p).kind;
            if (sub != Harmonicity::subharmonic && sub != Harmonicity::harmonic && failed.empty())
                failed = "b: u_tilde is not subharmonic for the tilde energy on radius " +
                         std::to_string(r);
            const GraphFunction& sup =
                step.superharmonic_tilde.has_value() ? *step.superharmonic_tilde : step.u_tilde;
            if (!positive_everywhere(sup)) {
                if (failed.empty())
                    failed = "b: superharmonic witness is not strictly positive on radius " +
                             std::to_string(r);
            } else {
                const Harmonicity sh = classify(gt, sup, step.base.domain, p).kind;
                if (sh != Harmonicity::superharmonic && sh != Harmonicity::harmonic &&
                    failed.empty())
                    failed = "b: no superharmonic witness for the tilde energy on radius " +
                             std::to_string(r);
            }
        }

        // Edge hypotheses over the union of the two edge sets.
        auto edge_checks = [&](const EdgeRecord& e) {
            const double b = gb.weight(e.x, e.y);
            const double bt = gt.weight(e.x, e.y);
            const auto ux = step.u[static_cast<std::size_t>(e.x)];
            const auto uy = step.u[static_cast<std::size_t>(e.y)];
            const auto vx = step.u_tilde[static_cast<std::size_t>(e.x)];
            const auto vy = step.u_tilde[static_cast<std::size_t>(e.y)];
            const double lhs_c = std::pow(b, 2.0 / p.value()) * ux * uy;
            const double rhs_c = alpha * std::pow(bt, 2.0 / p.value()) * vx * vy;
            if (lhs_c < rhs_c - hypothesis_tol * (1.0 + std::abs(lhs_c) + std::abs(rhs_c))) {
                if (failed.empty())
                    failed = "c: weight-product comparison fails on edge (" + std::to_string(e.x) +
                             "," + std::to_string(e.y) + ") at radius " + std::to_string(r);
                return;
            }
            const double lhs_d = std::pow(b, 1.0 / p.value()) * std::abs(ux - uy);
            const double rhs_d = beta * std::pow(bt, 1.0 / p.value()) * std::abs(vx - vy);
            const double tol_d = hypothesis_tol * (1.0 + lhs_d + rhs_d);
            const bool ok_d = p.value() >= 2.0 ? lhs_d >= rhs_d - tol_d : lhs_d <= rhs_d + tol_d;
            if (!ok_d && failed.empty())
                failed = "d: gradient comparison fails on edge (" + std::to_string(e.x) + "," +
                         std::to_string(e.y) + ") at radius " + std::to_string(r);
        };
        for (const EdgeRecord& e : gb.edges()) edge_checks(e);
        for (const EdgeRecord& e : gt.edges())
            if (gb.weight(e.x, e.y) == 0.0) edge_checks(e);
    }

    report.base_evidence = null_sequence_search(
        [&](int r) { return build(r).base; }, 1.0, p, radii, opts);
    report.base_class = classify_trend(report.base_evidence, thresholds);
    if (report.base_class != CriticalityClass::critical_trend && failed.empty())
        failed = "a: the base energy does not show a critical trend";

    if (transport_possible) {
        for (std::size_t k = 0; k < radii.size(); ++k) {
            const LiouvilleStep step = build(radii[k]);
            const GraphFunction& e_n = report.base_evidence.minimizers[k];
            GraphFunction transported(e_n.size());
            for (std::size_t i = 0; i < e_n.size(); ++i)
                transported[i] = step.u_tilde[i] * e_n[i] / step.u[i];
            report.transported_energies.push_back(
                energy(step.graph_tilde, transported, p).total);
        }
        const TrendStats s = trend_stats(radii, report.transported_energies);
        report.transported_class = classify_stats(s, thresholds);
    }

    report.hypotheses_ok = failed.empty();
    report.failed_hypothesis = failed;
    return report;
}

TransferReport gsr_criticality_transfer(
    const StepBuilder& build, const std::function<GraphFunction(const ExhaustionStep&)>& make_u,
    const PExponent& p, std::span<const int> radii, const TrendThresholds& thresholds,
    const CapacityOptions& opts) {
    if (!(p.value() > 2.0))
        throw std::invalid_argument("gsr_criticality_transfer requires p > 2, got " +
                                    std::to_string(p.value()));
    if (radii.empty()) throw std::invalid_argument("gsr_criticality_transfer: empty radius list");

    for (int r : radii) {
        const ExhaustionStep step = build(r);
        const GraphFunction u = make_u(step);
        require_function_size(step.graph, u, "gsr_criticality_transfer");
        if (!positive_everywhere(u))
            throw std::invalid_argument(
                "gsr_criticality_transfer: u must be strictly positive, radius " +
                std::to_string(r));
        if (classify(step.graph, u, step.domain, p).kind != Harmonicity::harmonic)
            throw std::invalid_argument("gsr_criticality_transfer: u is not harmonic, radius " +
                                        std::to_string(r));
    }

    auto transformed = [&](int r) {
        ExhaustionStep step = build(r);
        const GraphFunction u = make_u(step);
        std::vector<EdgeRecord> edges;
        edges.reserve(step.graph.edge_count());
        for (const EdgeRecord& e : step.graph.edges())
            edges.push_back(EdgeRecord{
                e.x, e.y,
                e.b * std::pow(u[static_cast<std::size_t>(e.x)] * u[static_cast<std::size_t>(e.y)],
                               p.value() / 2.0)});
        std::vector<double> m, zero;
        m.reserve(static_cast<std::size_t>(step.graph.vertex_count()));
        for (int x = 0; x < step.graph.vertex_count(); ++x) m.push_back(step.graph.measure(x));
        zero.assign(static_cast<std::size_t>(step.graph.vertex_count()), 0.0);
        ExhaustionStep out;
        out.graph = WeightedGraph(std::move(m), std::move(zero), edges, step.graph.interior());
        out.domain = step.domain;
        out.root = step.root;
        out.core = step.core;
        return out;
    };

    TransferReport report;
    report.base = null_sequence_search(build, 1.0, p, radii, opts);
    report.transferred = null_sequence_search(transformed, 1.0, p, radii, opts);
    report.base_class = classify_trend(report.base, thresholds);
    report.transferred_class = classify_trend(report.transferred, thresholds);
    report.trends_match = report.base_class == report.transferred_class;

    if (!report.transferred.core_values.empty()) {
        const std::vector<double> ones(report.transferred.core_values.front().size(), 1.0);
        report.ones_deviation =
            ground_state_trend(report.transferred, ones, 1.0).sup_deviation;
    }
    return report;
}

}  // namespace pgraph
