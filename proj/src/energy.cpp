#include "pgraph/energy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "pgraph/inequalities.hpp"
#include "pgraph/numeric.hpp"

namespace pgraph {

namespace {

void require_nonnegative(const GraphFunction& u, const char* name) {
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!(u[i] >= 0.0))
            throw std::invalid_argument(std::string(name) + ": requires u >= 0, got " +
                                        std::to_string(u[i]) + " at vertex " + std::to_string(i));
}

void require_interior_support(const WeightedGraph& g, const GraphFunction& phi, const char* name) {
    for (int x = 0; x < g.vertex_count(); ++x)
        if (phi[static_cast<std::size_t>(x)] != 0.0 && !g.interior().contains(x))
            throw std::invalid_argument(std::string(name) +
                                        ": phi must be supported in the interior; nonzero at " +
                                        std::to_string(x));
}

double avg_abs(double a, double b) { return 0.5 * (std::abs(a) + std::abs(b)); }

}  // namespace

EnergyReport energy(const WeightedGraph& g, const GraphFunction& f, const PExponent& p,
                    bool with_edge_terms) {
    require_function_size(g, f, "energy");
    EnergyReport report;
    TermAccumulator grad;
    grad.reserve(g.edge_count());
    if (with_edge_terms) report.edge_terms.emplace();
    for (const EdgeRecord& e : g.edges()) {
        const double term = e.b * std::pow(std::abs(gradient(f, e.x, e.y)), p.value());
        grad.add(term);
        if (with_edge_terms) report.edge_terms->push_back(EdgeTerm{e.x, e.y, term});
    }
    TermAccumulator pot;
    pot.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int x = 0; x < g.vertex_count(); ++x)
        pot.add(g.potential(x) * std::pow(std::abs(f[static_cast<std::size_t>(x)]), p.value()));
    report.gradient_part = grad.sum();
    report.potential_part = pot.sum();
    report.total = report.gradient_part + report.potential_part;
    return report;
}

double bracket(const WeightedGraph& g, const GraphFunction& f, const GraphFunction& phi) {
    require_function_size(g, f, "bracket");
    require_function_size(g, phi, "bracket");
    TermAccumulator acc;
    acc.reserve(f.size());
    for (int x = 0; x < g.vertex_count(); ++x)
        acc.add(f[static_cast<std::size_t>(x)] * phi[static_cast<std::size_t>(x)] * g.measure(x));
    return acc.sum();
}

double simplified_energy(const WeightedGraph& g, const GraphFunction& u, const GraphFunction& phi,
                         const PExponent& p) {
    p.require_greater_than_one("simplified_energy");
    require_function_size(g, u, "simplified_energy");
    require_function_size(g, phi, "simplified_energy");
    require_nonnegative(u, "simplified_energy");
    TermAccumulator acc;
    acc.reserve(g.edge_count());
    for (const EdgeRecord& e : g.edges()) {
        const double ux = u[static_cast<std::size_t>(e.x)];
        const double uy = u[static_cast<std::size_t>(e.y)];
        const double dphi = gradient(phi, e.x, e.y);
        const double factor = e.b * ux * uy * dphi * dphi;
        if (factor == 0.0) {
            acc.add(0.0);
            continue;
        }
        // factor > 0 forces the first bracket summand > 0, so no 0^negative.
        const double br = std::sqrt(ux * uy) * std::abs(dphi) +
                          avg_abs(phi[static_cast<std::size_t>(e.x)],
                                  phi[static_cast<std::size_t>(e.y)]) *
                              std::abs(gradient(u, e.x, e.y));
        acc.add(factor * std::pow(br, p.value() - 2.0));
    }
    return acc.sum();
}

double simplified_energy_1(const WeightedGraph& g, const GraphFunction& u,
                           const GraphFunction& phi, const PExponent& p) {
    p.require_greater_than_one("simplified_energy_1");
    require_function_size(g, u, "simplified_energy_1");
    require_function_size(g, phi, "simplified_energy_1");
    require_nonnegative(u, "simplified_energy_1");
    TermAccumulator acc;
    acc.reserve(g.edge_count());
    for (const EdgeRecord& e : g.edges()) {
        const double uu = u[static_cast<std::size_t>(e.x)] * u[static_cast<std::size_t>(e.y)];
        const double dphi = std::abs(gradient(phi, e.x, e.y));
        acc.add(uu == 0.0 || dphi == 0.0
                    ? 0.0
                    : e.b * std::pow(uu, 0.5 * p.value()) * std::pow(dphi, p.value()));
    }
    return acc.sum();
}

double simplified_energy_2(const WeightedGraph& g, const GraphFunction& u,
                           const GraphFunction& phi, const PExponent& p) {
    if (p.value() < 2.0)
        throw std::invalid_argument("simplified_energy_2 is defined for p >= 2, got " +
                                    std::to_string(p.value()));
    require_function_size(g, u, "simplified_energy_2");
    require_function_size(g, phi, "simplified_energy_2");
    require_nonnegative(u, "simplified_energy_2");
    TermAccumulator acc;
    acc.reserve(g.edge_count());
    for (const EdgeRecord& e : g.edges()) {
        const double uu = u[static_cast<std::size_t>(e.x)] * u[static_cast<std::size_t>(e.y)];
        const double dphi = gradient(phi, e.x, e.y);
        if (uu == 0.0 || dphi == 0.0) {
            acc.add(0.0);
            continue;
        }
        // At p = 2 both power-0 factors are 1 even when their base is 0.
        const double du = std::abs(gradient(u, e.x, e.y));
        const double avg = avg_abs(phi[static_cast<std::size_t>(e.x)],
                                   phi[static_cast<std::size_t>(e.y)]);
        acc.add(e.b * uu * std::pow(du, p.value() - 2.0) * std::pow(avg, p.value() - 2.0) * dphi *
                dphi);
    }
    return acc.sum();
}

double simplified_energy_3(const WeightedGraph& g, const GraphFunction& u,
                           const GraphFunction& phi, const PExponent& p) {
    p.require_greater_than_one("simplified_energy_3");
    require_function_size(g, u, "simplified_energy_3");
    require_function_size(g, phi, "simplified_energy_3");
    require_nonnegative(u, "simplified_energy_3");
    TermAccumulator acc;
    acc.reserve(g.edge_count());
    for (const EdgeRecord& e : g.edges()) {
        const double ux = u[static_cast<std::size_t>(e.x)];
        const double uy = u[static_cast<std::size_t>(e.y)];
        const double dphi = gradient(phi, e.x, e.y);
        const double factor = e.b * ux * uy * dphi * dphi;
        if (factor == 0.0) {
            acc.add(0.0);
            continue;
        }
        const double du = gradient(u, e.x, e.y);
        const double phi_u = du < 0.0   ? phi[static_cast<std::size_t>(e.x)]
                             : du > 0.0 ? phi[static_cast<std::size_t>(e.y)]
                                        : 0.0;
        const double uphi_x = ux * phi[static_cast<std::size_t>(e.x)];
        const double uphi_y = uy * phi[static_cast<std::size_t>(e.y)];
        // factor > 0 rules out a vanishing bracket (see the gradient cases).
        const double br = std::abs(uphi_x - uphi_y) + std::abs(phi_u) * std::abs(du);
        acc.add(factor * std::pow(br, p.value() - 2.0));
    }
    return acc.sum();
}

namespace {

/// lhs of the representation: h(u phi) - <H u, u |phi|^p>. The bracket only
/// needs H u where phi is nonzero, which the interior-support check covers.
double representation_lhs(const WeightedGraph& g, const GraphFunction& u, const GraphFunction& phi,
                          const PExponent& p, double* scale_out) {
    require_function_size(g, u, "gsr");
    require_function_size(g, phi, "gsr");
    require_nonnegative(u, "gsr");
    require_interior_support(g, phi, "gsr");

    GraphFunction uphi(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) uphi[i] = u[i] * phi[i];
    const double h_uphi = energy(g, uphi, p).total;

    TermAccumulator br;
    for (int x = 0; x < g.vertex_count(); ++x) {
        const double phix = phi[static_cast<std::size_t>(x)];
        if (phix == 0.0) continue;
        br.add(schroedinger_at(g, u, x, p) * u[static_cast<std::size_t>(x)] *
               std::pow(std::abs(phix), p.value()) * g.measure(x));
    }
    const double pairing = br.sum();
    if (scale_out != nullptr) *scale_out = std::abs(h_uphi) + std::abs(pairing);
    return h_uphi - pairing;
}

}  // namespace

GsrReport gsr_check(const WeightedGraph& g, const GraphFunction& u, const GraphFunction& phi,
                    const PExponent& p) {
    p.require_greater_than_one("gsr_check");
    GsrReport report;
    double scale = 0.0;
    report.lhs = representation_lhs(g, u, phi, p, &scale);
    report.rhs = simplified_energy(g, u, phi, p);
    const double noise = 1e-14 * (1.0 + scale + report.rhs);
    if (std::abs(report.lhs) <= noise && report.rhs <= noise) {
        report.degenerate = true;
        report.ratio = 0.0;
    } else {
        report.degenerate = false;
        report.ratio = report.lhs / report.rhs;
    }
    return report;
}

double picone_residual(const WeightedGraph& g, const GraphFunction& u, const GraphFunction& phi,
                       const PExponent& p) {
    p.require_greater_than_one("picone_residual");
    return representation_lhs(g, u, phi, p, nullptr);
}

CorollaryBounds corollary_bounds_check(const WeightedGraph& g, const GraphFunction& u,
                                       const GraphFunction& phi, const PExponent& p,
                                       std::optional<double> upper_constant, double tol) {
    p.require_greater_than_one("corollary_bounds_check");
    CorollaryBounds out;
    out.lhs = representation_lhs(g, u, phi, p, nullptr);
    out.h_u1 = simplified_energy_1(g, u, phi, p);
    out.equality_gap = std::abs(out.lhs - out.h_u1);
    const double scale = 1.0 + std::abs(out.lhs) + out.h_u1;

    if (p.value() >= 2.0) {
        out.constant = constant_cp(p);
        out.slack = out.lhs - out.constant * out.h_u1;
        out.holds = out.slack >= -tol * scale;
        out.h_u2 = simplified_energy_2(g, u, phi, p);
        const double denom = out.h_u1 + out.h_u2;
        out.ratio_h12 = denom > 1e-14 * scale ? out.lhs / denom
                                              : std::numeric_limits<double>::quiet_NaN();
    } else {
        out.constant = upper_constant.has_value() ? *upper_constant : gsr_upper_constant(p);
        out.slack = out.constant * out.h_u1 - out.lhs;
        out.holds = out.slack >= -tol * scale;
        out.h_u2 = std::numeric_limits<double>::quiet_NaN();
        out.ratio_h12 = std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

}  // namespace pgraph
