/**
 * Labelled undirected multigraphs, their Laplacian matrices, and the
 * combinatorial cut quantities they induce.
 *
 * A multigraph on n+1 vertices is stored as a symmetric multiplicity map
 * with a zero diagonal; edge multiplicities are positive integers.
 */

#ifndef LAPLAT_MULTIGRAPH_HPP
#define LAPLAT_MULTIGRAPH_HPP

#include <optional>
#include <utility>

#include "laplat/rational.hpp"

namespace laplat {

class Multigraph {
  public:
    /// Builds a multigraph with the given vertex count and no edges.
    explicit Multigraph(int vertex_count);

    /// Builds from a full symmetric multiplicity matrix. Rejects self-loops
    /// and asymmetric input.
    static Multigraph from_multiplicities(const IMat& mult);

    int vertex_count() const { return static_cast<int>(mult_.size()); }
    Int multiplicity(int i, int j) const;
    void set_multiplicity(int i, int j, Int m);
    void add_edge(int i, int j, Int m = 1);

    Int degree(int v) const;
    Int edge_count() const;
    bool is_connected() const;

    /// Relabels vertices: vertex i of the result is vertex perm[i] of *this.
    Multigraph relabelled(const std::vector<int>& perm) const;

    const IMat& multiplicities() const { return mult_; }

    bool operator==(const Multigraph& o) const { return mult_ == o.mult_; }

  private:
    IMat mult_;  // symmetric, zero diagonal
};

/// A nontrivial vertex cut together with its two weights.
struct Cut {
    std::vector<int> side;  // vertex indices of S, sorted
    Int l1_weight = 0;      // mu_1(S)
    Int linf_weight = 0;    // mu_inf(S)
};

struct GraphGenus {
    Int g = 0;
};

/// Rows of the Laplacian Q = D - A; needs >= 2 vertices.
IMat laplacian(const Multigraph& g);

/// Multigraph whose Laplacian has the given rows. Validates symmetry,
/// zero row sums and nonpositive off-diagonal entries.
Multigraph graph_from_laplacian(const IMat& q);

/// Number of spanning trees via a fraction-free integer determinant of a
/// principal minor. Returns 0 for disconnected graphs.
BigInt spanning_tree_count(const Multigraph& g);

/// mu_1(S): total multiplicity across the cut.
Int cut_weight_l1(const Multigraph& g, const std::vector<int>& side);

/// mu_inf(S): max over outside vertices of their degree into S.
Int cut_weight_linf(const Multigraph& g, const std::vector<int>& side);

/// Global minimum cut (Stoer-Wagner, cross-checked by enumeration at small
/// sizes). The witness is the lexicographically smallest minimizing side.
std::pair<Cut, Int> min_cut_l1(const Multigraph& g);

/// Minimum over nontrivial cuts of mu_inf(S), by subset enumeration.
/// Throws when the vertex count exceeds the guard.
std::pair<Cut, Int> min_cut_linf(const Multigraph& g, int guard = 24);

/// Cycle rank m - n of a connected multigraph.
GraphGenus genus(const Multigraph& g);

}  // namespace laplat

#endif  // LAPLAT_MULTIGRAPH_HPP
