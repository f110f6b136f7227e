/**
 * Brute-force verifiers for the closed-form claims: acyclic-orientation
 * critical points, grid-sampled Voronoi neighbours of the origin, and
 * standard perturbations with their invariant limits.
 */

#ifndef LAPLAT_ORACLES_HPP
#define LAPLAT_ORACLES_HPP

#include "laplat/invariants.hpp"

namespace laplat {

struct OrientationPoint {
    std::vector<int> pi;  // vertex ordering inducing the acyclic orientation
    IVec nu;              // indegree vector
    RVec c;               // H_0 projection of nu
    Rat h;                // distance of c to the lattice
};

/// One point per vertex ordering: orient every edge from earlier to later,
/// record indegrees, project to H_0, and measure the lattice distance. The
/// value is asserted equal to the covering radius for every ordering.
std::vector<OrientationPoint> critical_points(const Multigraph& g, int guard = 8);

/// Lattice points (other than the origin) that co-minimize the simplicial
/// distance with the origin at some point of a rational grid over the
/// fundamental parallelepiped. Exact ties; refinement only grows the set.
std::vector<IVec> voronoi_neighbors_grid(const LaplacianLattice& lat, int resolution,
                                         int max_resolution = 64);

struct PerturbedLattice {
    Rat eps;
    Int lambda;        // scale clearing the denominators of eps
    Multigraph scaled{1}; // graph with Laplacian lambda * Q_eps, all pairs adjacent
    RMat rows;         // exact perturbed rows Q_eps
};

/// Standard perturbation: every pair gains eps worth of edge weight,
/// diagonals rebalanced to keep zero row sums.
PerturbedLattice perturb_standard(const Multigraph& g, const Rat& eps);

struct LimitStep {
    Rat eps;
    Rat nu_gap;   // |nu(L_eps) - nu(L)|
    Rat pac_gap;  // |Pac(L_eps) - Pac(L)|
};

struct LimitReport {
    std::vector<LimitStep> steps;
    bool gaps_nonincreasing = false;
    bool final_within_bound = false;  // last gaps <= (n+1) * last eps
};

/// Invariants of the perturbed lattices, rescaled by 1/lambda, compared
/// against the unperturbed ones along a decreasing eps sequence.
LimitReport limit_check(const Multigraph& g, const std::vector<Rat>& eps_seq);

}  // namespace laplat

#endif  // LAPLAT_ORACLES_HPP
