/**
 * Closed-form invariants of a Laplacian lattice under the simplicial
 * distance: shortest vector, packing and covering radius, covering and
 * packing density, and the Ramanujan classification of the source graph.
 */

#ifndef LAPLAT_INVARIANTS_HPP
#define LAPLAT_INVARIANTS_HPP

#include "laplat/lattice.hpp"
#include "laplat/spectrum.hpp"

namespace laplat {

struct ShortestVector {
    Rat nu;
    IVec witness;           // a minimizing u_S
    std::vector<int> side;  // the subset S
};

struct RamanujanEvidence {
    bool regular = false;
    Int degree = 0;
    IVec degree_sequence;            // filled when not regular
    double lambda_adjacency = 0.0;   // max(|lambda^A_2|, |lambda^A_{n+1}|)
    double bound = 0.0;              // 2*sqrt(d-1)
    bool ramanujan = false;
    bool laplacian_interval_ok = false;  // nonzero spectrum in [d-2sqrt(d-1), d+2sqrt(d-1)]
};

struct RamanujanBounds {
    bool applicable = false;  // false: bounds not claimed
    double theta = 0.0;
    double theta_upper = 0.0;  // d / (4(d - 2 sqrt(d-1))), +inf when d = 2
    double gamma = 0.0;
    double gamma_lower = 0.0;  // (d - 2 sqrt(d-1)) / (2(n+1)(d + 2 sqrt(d-1)))
    bool hold = false;
};

struct InvariantReport {
    Rat nu;
    IVec shortest_witness;
    Rat pac;
    Cut pac_witness;
    Rat cov;
    BigInt trees;
    double gamma = 0.0;
    double theta = 0.0;
    RamanujanEvidence ramanujan;
};

/// nu = MC_inf with a minimizing u_S; per-subset the identity
/// d(O, u_S) = mu_inf(S) is asserted. Enumeration guard on the vertex count.
ShortestVector shortest_vector(const Multigraph& g, int guard = 24);

/// Pac = MC_1 / (n+1) with the minimum-cut witness.
std::pair<Rat, Cut> packing_radius(const Multigraph& g);

/// Cov = (g + n) / (n+1).
Rat covering_radius(const Multigraph& g);

/// (gamma, theta) from the nonzero Laplacian spectrum; the Kirchhoff
/// identity prod(lambda) = (n+1)*trees is asserted to 1e-6 relative.
std::pair<double, double> densities(const Multigraph& g);

RamanujanEvidence is_ramanujan(const Multigraph& g);

RamanujanBounds ramanujan_bounds(const Multigraph& g);

/// Full report; respects the shortest-vector enumeration guard.
InvariantReport invariant_report(const Multigraph& g, int guard = 24);

}  // namespace laplat

#endif  // LAPLAT_INVARIANTS_HPP
