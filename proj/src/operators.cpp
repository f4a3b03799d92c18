#include "pgraph/operators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "pgraph/numeric.hpp"

namespace pgraph {

PExponent::PExponent(double p) : p_(p) {
    if (!std::isfinite(p) || p < 1.0)
        throw std::invalid_argument("exponent p must be finite and >= 1, got " + std::to_string(p));
}

double PExponent::conjugate() const {
    require_greater_than_one("conjugate exponent");
    return p_ / (p_ - 1.0);
}

void PExponent::require_greater_than_one(const char* context) const {
    if (p_ <= 1.0)
        throw std::invalid_argument(std::string(context) + " requires p > 1, got " +
                                    std::to_string(p_));
}

double phi_p(double t, const PExponent& p) {
    if (t == 0.0) return 0.0;
    const double mag = std::pow(std::abs(t), p.value() - 1.0);
    return t > 0.0 ? mag : -mag;
}

double p_laplacian(const WeightedGraph& g, const GraphFunction& f, VertexId x,
                   const PExponent& p) {
    require_function_size(g, f, "p_laplacian");
    if (!g.interior().contains(x))
        throw std::invalid_argument("p_laplacian: vertex " + std::to_string(x) +
                                    " is not interior; operator undefined there");
    TermAccumulator acc;
    for (const Neighbor& nb : g.neighbors(x)) acc.add(nb.weight * phi_p(gradient(f, x, nb.id), p));
    return acc.sum() / g.measure(x);
}

double schroedinger_at(const WeightedGraph& g, const GraphFunction& f, VertexId x,
                       const PExponent& p) {
    return p_laplacian(g, f, x, p) +
           g.potential(x) / g.measure(x) * phi_p(f[static_cast<std::size_t>(x)], p);
}

GraphFunction schroedinger_apply(const WeightedGraph& g, const GraphFunction& f,
                                 const PExponent& p) {
    require_function_size(g, f, "schroedinger_apply");
    GraphFunction out(f.size(), std::numeric_limits<double>::quiet_NaN());
    for (int x = 0; x < g.vertex_count(); ++x)
        if (g.interior().contains(x)) out[static_cast<std::size_t>(x)] = schroedinger_at(g, f, x, p);
    return out;
}

double greens_residual(const WeightedGraph& g, const GraphFunction& f, const GraphFunction& phi,
                       const VertexSet& V, const PExponent& p) {
    require_function_size(g, f, "greens_residual");
    require_function_size(g, phi, "greens_residual");
    require_subset_universe(g, V, "greens_residual");
    for (VertexId x : V.members())
        if (!g.interior().contains(x))
            throw std::invalid_argument("greens_residual: V contains non-interior vertex " +
                                        std::to_string(x));

    TermAccumulator lhs;
    for (VertexId x : V.members())
        lhs.add(schroedinger_at(g, f, x, p) * phi[static_cast<std::size_t>(x)] * g.measure(x));

    const VertexSet bd = g.boundary(V);
    TermAccumulator rhs;
    for (const EdgeRecord& e : g.edges()) {
        const bool xin = V.contains(e.x);
        const bool yin = V.contains(e.y);
        if (xin && yin) {
            rhs.add(e.b * phi_p(gradient(f, e.x, e.y), p) * gradient(phi, e.x, e.y));
        } else if (xin && bd.contains(e.y)) {
            rhs.add(e.b * phi_p(gradient(f, e.x, e.y), p) * phi[static_cast<std::size_t>(e.x)]);
        } else if (yin && bd.contains(e.x)) {
            rhs.add(e.b * phi_p(gradient(f, e.y, e.x), p) * phi[static_cast<std::size_t>(e.y)]);
        }
    }
    for (VertexId x : V.members())
        rhs.add(g.potential(x) * phi_p(f[static_cast<std::size_t>(x)], p) *
                phi[static_cast<std::size_t>(x)]);

    return std::abs(lhs.sum() - rhs.sum());
}

const char* to_string(Harmonicity h) {
    switch (h) {
        case Harmonicity::harmonic: return "harmonic";
        case Harmonicity::superharmonic: return "superharmonic";
        case Harmonicity::subharmonic: return "subharmonic";
        case Harmonicity::neither: return "neither";
    }
    return "neither";
}

double default_classify_tolerance(const WeightedGraph& g, const GraphFunction& u,
                                  const PExponent& p) {
    require_function_size(g, u, "default_classify_tolerance");
    double max_abs_u = 0.0;
    for (double v : u) max_abs_u = std::max(max_abs_u, std::abs(v));
    double max_deg = 0.0;
    double min_m = std::numeric_limits<double>::infinity();
    for (int x = 0; x < g.vertex_count(); ++x) {
        max_deg = std::max(max_deg, g.degree(x));
        min_m = std::min(min_m, g.measure(x));
    }
    if (!std::isfinite(min_m)) min_m = 1.0;
    return 1e-9 * (1.0 + std::pow(max_abs_u, p.value() - 1.0) * max_deg / min_m);
}

HarmonicityClass classify(const WeightedGraph& g, const GraphFunction& u, const VertexSet& V,
                          const PExponent& p, double tolerance) {
    require_function_size(g, u, "classify");
    require_subset_universe(g, V, "classify");
    if (V.empty()) throw std::invalid_argument("classify: empty vertex set");
    const double tol = tolerance > 0.0 ? tolerance : default_classify_tolerance(g, u, p);

    HarmonicityClass out;
    out.tolerance = tol;
    out.max_value = -std::numeric_limits<double>::infinity();
    out.min_value = std::numeric_limits<double>::infinity();
    for (VertexId x : V.members()) {
        const double hu = schroedinger_at(g, u, x, p);
        out.max_value = std::max(out.max_value, hu);
        out.min_value = std::min(out.min_value, hu);
    }

    const bool all_small = out.max_value <= tol && out.min_value >= -tol;
    if (all_small)
        out.kind = Harmonicity::harmonic;
    else if (out.min_value >= -tol)
        out.kind = Harmonicity::superharmonic;
    else if (out.max_value <= tol)
        out.kind = Harmonicity::subharmonic;
    else
        out.kind = Harmonicity::neither;
    return out;
}

}  // namespace pgraph
