/**
 * Recovering a graph from its Delaunay polytope, deciding polytope
 * congruence through graph isomorphism, and the exhaustive small-graph
 * census grouped by lattice.
 */

#ifndef LAPLAT_RECONSTRUCT_HPP
#define LAPLAT_RECONSTRUCT_HPP

#include "laplat/delaunay.hpp"

namespace laplat {

/**
 * Recovers the Laplacian rows from the polytope vertex set: row i is the
 * unique coordinate-i maximizer among vertices of the cone
 * C_i = {p_i >= 0, p_j <= 0 for j != i}. The result is validated (valid
 * connected Laplacian, and regenerating the polytope gives back the input
 * set); any failure throws std::invalid_argument.
 */
IMat reconstruct_laplacian(const std::vector<IVec>& vertex_set);

/// Same recovery, returned as the multigraph.
Multigraph reconstruct_graph(const std::vector<IVec>& vertex_set);

/// A permutation sigma with mult_b(sigma(u), sigma(v)) = mult_a(u, v),
/// i.e. Q_b = sigma Q_a sigma^{-1}, or nullopt. Exact backtracking with
/// degree pruning; guard on the vertex count.
std::optional<std::vector<int>> graphs_isomorphic(const Multigraph& a,
                                                  const Multigraph& b,
                                                  int guard = 10);

/// Exact equality of the two vertex sets (order-insensitive).
bool polytopes_identical(std::vector<IVec> v1, std::vector<IVec> v2);

/// Congruence, decided by reconstructing both graphs and testing
/// isomorphism; returns the vertex-label permutation when congruent.
std::optional<std::vector<int>> polytopes_congruent(const std::vector<IVec>& v1,
                                                    const std::vector<IVec>& v2);

struct LatticeClass {
    IMat hnf;                       // canonical lattice identifier
    std::vector<Multigraph> graphs; // sorted by multiplicity matrix
};

/// All connected multigraphs on n1 labelled vertices with edge
/// multiplicities <= max_mult, grouped by their lattice. Within each
/// class the polytopes are asserted pairwise distinct.
std::vector<LatticeClass> lattice_census(int n1, Int max_mult);

/// The census class of the given lattice (possibly empty).
std::vector<Multigraph> enumerate_graphs_with_lattice(const LaplacianLattice& lat,
                                                      Int max_mult);

}  // namespace laplat

#endif  // LAPLAT_RECONSTRUCT_HPP
