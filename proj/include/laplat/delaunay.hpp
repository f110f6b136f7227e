/**
 * The Delaunay polytope of the origin for a Laplacian lattice: vertex,
 * facet and edge structure, the permutation simplices that triangulate
 * H_0, and exact point location in that triangulation.
 */

#ifndef LAPLAT_DELAUNAY_HPP
#define LAPLAT_DELAUNAY_HPP

#include "laplat/lattice.hpp"

namespace laplat {

struct PolytopeVertex {
    std::vector<int> side;  // the subset S with u_S = point, sorted
    IVec point;
};

struct PolytopeFacet {
    int i = 0, j = 0;           // F_{i,j}: subsets containing i but not j
    std::vector<int> vertices;  // indices into DelaunayPolytope::vertices
};

struct DelaunayPolytope {
    int n = 0;
    std::vector<PolytopeVertex> vertices;
    std::vector<PolytopeFacet> facets;
    std::vector<std::pair<int, int>> edges;  // vertex index pairs, i < j

    int vertex_index(const IVec& point) const;  // -1 when absent
};

/// All 2^{n+1}-2 subset sums, the n(n+1) facets F_{i,j}, and the
/// subset-chain edges (u_S, u_{S+{j}}) with both subsets proper.
DelaunayPolytope polytope(const LaplacianLattice& lat, int guard = 12);

/// Number of facets incident on the given polytope vertex; asserted equal
/// to k(n+1-k) for a subset of size k. Rejects non-vertices.
int vertex_facet_degree(const DelaunayPolytope& poly, const IVec& v);

struct SimplexCertificate {
    bool contained = false;
    RVec lambda;  // coefficients along sigma; containment iff descending 1..0
};

/// Membership of p in the simplex of the vertex ordering sigma, via the
/// coefficient chain 1 = lambda_0 >= ... >= lambda_n >= 0 (the sigma(0)
/// coefficient is gauged to 1 by adding a multiple of sum_i b_i = 0).
SimplexCertificate simplex_contains(const LaplacianLattice& lat,
                                    const std::vector<int>& sigma, const RVec& p);

struct LocatedCell {
    std::vector<int> sigma;
    IVec translate;
    SimplexCertificate certificate;
};

/// Containing cell of the triangulation: p lies in simplex(sigma) + q.
/// Heuristic floor-and-sort placement, verified; exhaustive fallback.
LocatedCell locate(const LaplacianLattice& lat, const RVec& p, int guard = 8);

struct FVector {
    long long f0 = 0;
    long long f1 = 0;
    long long f_top = 0;  // facet count
};

/// f-vector from an exact rational convex hull of the vertex set (n <= 3),
/// checked against the closed-form counts.
FVector hull_f_vector_check(const DelaunayPolytope& poly, int guard = 3);

/// Linear functional strictly maximized at u_S over all other subset sums
/// (the convex-position certificate). Throws if strictness fails.
RVec supporting_functional(const LaplacianLattice& lat, const std::vector<int>& side);

/// Checks every facet's affine support: members satisfy the affine relation
/// and all other vertices lie strictly on one side.
bool verify_facet_supports(const LaplacianLattice& lat, const DelaunayPolytope& poly);

/// Delaunay cells modulo lattice translation, each as a canonical sorted
/// vertex list (translated so the lexicographically smallest placement of
/// a vertex at the origin is chosen). Sorted, deduplicated.
std::vector<std::vector<IVec>> triangle_classes(const LaplacianLattice& lat,
                                                int guard = 8);

}  // namespace laplat

#endif  // LAPLAT_DELAUNAY_HPP
