#include "laplat/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace laplat {

ShortestVector shortest_vector(const Multigraph& g, int guard) {
    const int n1 = g.vertex_count();
    if (!g.is_connected()) throw std::invalid_argument("graph is disconnected");
    if (n1 > guard)
        throw std::runtime_error("enumeration limit: " + std::to_string(n1) +
                                 " vertices exceeds guard " + std::to_string(guard));
    LaplacianLattice lat(g);
    const IVec origin(n1, 0);
    Int best = -1;
    std::vector<int> best_side;
    IVec best_witness;
    const unsigned total = 1u << n1;
    for (unsigned mask = 1; mask + 1 < total; ++mask) {
        std::vector<int> side;
        for (int v = 0; v < n1; ++v)
            if (mask & (1u << v)) side.push_back(v);
        IVec us = lat.subset_sum(side);
        Rat d = simplicial_distance(origin, us, SimplexOrientation::TRI);
        if (d != cut_weight_linf(g, side))
            throw std::logic_error("d(O, u_S) does not match mu_inf(S)");
        Int dv = to_int_checked(rat_num(d));
        bool better = best < 0 || dv < best;
        bool tie = dv == best &&
                   std::lexicographical_compare(side.begin(), side.end(),
                                                best_side.begin(), best_side.end());
        if (better || tie) {
            best = dv;
            best_side = side;
            best_witness = us;
        }
    }
    return {Rat(best), best_witness, best_side};
}

std::pair<Rat, Cut> packing_radius(const Multigraph& g) {
    if (!g.is_connected()) throw std::invalid_argument("graph is disconnected");
    auto [cut, mc1] = min_cut_l1(g);
    return {Rat(mc1, g.vertex_count()), cut};
}

Rat covering_radius(const Multigraph& g) {
    const Int n = g.vertex_count() - 1;
    return Rat(genus(g).g + n, n + 1);
}

std::pair<double, double> densities(const Multigraph& g) {
    if (!g.is_connected()) throw std::invalid_argument("graph is disconnected");
    const int n1 = g.vertex_count();
    const int n = n1 - 1;
    auto eig = laplacian_spectrum(g);
    // drop the single zero eigenvalue of a connected graph
    double log_prod = 0.0, sum = 0.0;
    for (int i = 1; i < n1; ++i) {
        log_prod += std::log(eig[i]);
        sum += eig[i];
    }
    const double trees = spanning_tree_count(g).convert_to<double>();
    const double kirchhoff = std::exp(log_prod) / n1;
    if (std::abs(kirchhoff - trees) > 1e-6 * trees)
        throw std::runtime_error("kirchhoff identity check failed");
    const double geo = std::exp(log_prod / n);
    auto [cut, mc1] = min_cut_l1(g);
    (void)cut;
    const double gamma = static_cast<double>(mc1) / (n1 * geo);
    const double theta = sum / (2.0 * n1 * geo);
    return {gamma, theta};
}

RamanujanEvidence is_ramanujan(const Multigraph& g) {
    RamanujanEvidence ev;
    const int n1 = g.vertex_count();
    ev.degree_sequence.resize(n1);
    for (int v = 0; v < n1; ++v) ev.degree_sequence[v] = g.degree(v);
    ev.regular = std::all_of(ev.degree_sequence.begin(), ev.degree_sequence.end(),
                             [&](Int d) { return d == ev.degree_sequence[0]; });
    if (!ev.regular) return ev;
    ev.degree = ev.degree_sequence[0];
    const double d = static_cast<double>(ev.degree);
    ev.bound = 2.0 * std::sqrt(d - 1.0);

    auto adj = adjacency_spectrum(g);  // ascending; top one is d
    double lam = 0.0;
    for (int i = 0; i + 1 < n1; ++i) lam = std::max(lam, std::abs(adj[i]));
    ev.lambda_adjacency = lam;
    ev.ramanujan = lam <= ev.bound + 1e-9;

    auto lap = laplacian_spectrum(g);
    ev.laplacian_interval_ok = true;
    for (int i = 1; i < n1; ++i)
        if (lap[i] < d - ev.bound - 1e-9 || lap[i] > d + ev.bound + 1e-9)
            ev.laplacian_interval_ok = false;
    return ev;
}

RamanujanBounds ramanujan_bounds(const Multigraph& g) {
    RamanujanBounds rb;
    RamanujanEvidence ev = is_ramanujan(g);
    if (!ev.regular || !ev.ramanujan) return rb;  // bounds not claimed
    rb.applicable = true;
    const double d = static_cast<double>(ev.degree);
    const int n1 = g.vertex_count();
    auto [gamma, theta] = densities(g);
    rb.gamma = gamma;
    rb.theta = theta;
    const double lo = d - 2.0 * std::sqrt(d - 1.0);
    const double hi = d + 2.0 * std::sqrt(d - 1.0);
    rb.theta_upper = lo > 1e-12 ? d / (4.0 * lo) : std::numeric_limits<double>::infinity();
    rb.gamma_lower = lo / (2.0 * n1 * hi);
    rb.hold = theta <= rb.theta_upper + 1e-9 && gamma >= rb.gamma_lower - 1e-9;
    if (!rb.hold) throw std::runtime_error("ramanujan density bounds violated");
    return rb;
}

InvariantReport invariant_report(const Multigraph& g, int guard) {
    InvariantReport rep;
    auto sv = shortest_vector(g, guard);
    rep.nu = sv.nu;
    rep.shortest_witness = sv.witness;
    auto [pac, cut] = packing_radius(g);
    rep.pac = pac;
    rep.pac_witness = cut;
    rep.cov = covering_radius(g);
    rep.trees = spanning_tree_count(g);
    auto [gamma, theta] = densities(g);
    rep.gamma = gamma;
    rep.theta = theta;
    rep.ramanujan = is_ramanujan(g);
    return rep;
}

}  // namespace laplat
