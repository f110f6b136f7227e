/**
 * Exact geometry of the hyperplane H_0 (coordinates summing to zero):
 * simplicial distances, projections, midpoints, and the integer lattice
 * spanned by the rows of a graph Laplacian.
 */

#ifndef LAPLAT_LATTICE_HPP
#define LAPLAT_LATTICE_HPP

#include <optional>

#include "laplat/multigraph.hpp"

namespace laplat {

/// Selects the regular simplex orientation: TRI is the simplex with
/// vertices t_i (n at coordinate i, -1 elsewhere); TRI_BAR is its negation.
enum class SimplexOrientation { TRI, TRI_BAR };

/// Throws unless the coordinates sum to zero.
void require_h0(const RVec& p);
void require_h0(const IVec& p);

/// Orthogonal projection onto H_0 along (1,...,1): subtracts the mean.
RVec project_H0(const RVec& v);

/// d(p,q) under the chosen orientation; both points must lie in H_0.
/// TRI gives |min_i(q_i - p_i)|, TRI_BAR gives |min_i(p_i - q_i)|.
Rat simplicial_distance(const RVec& p, const RVec& q, SimplexOrientation o);
Rat simplicial_distance(const IVec& p, const IVec& q, SimplexOrientation o);

/// Coordinatewise maximum (not in H_0 in general).
RVec max_sum(const RVec& p, const RVec& q);
IVec max_sum(const IVec& p, const IVec& q);

/// Midpoint of p and the origin under d_TRI, with its radius:
/// m = project_H0(p (+) O), r = |p (+) O|_1 / (n+1).
std::pair<RVec, Rat> triangle_midpoint(const RVec& p);

/// Result of a distance-to-lattice query: the exact minimum and every
/// lattice point attaining it (sorted lexicographically).
struct LatticeDistance {
    Rat value;
    std::vector<IVec> argmins;
};

/**
 * The row lattice of a graph Laplacian, a finite-index sublattice of A_n.
 *
 * The working basis is rows b_0..b_{n-1}; its Hermite normal form over the
 * A_n basis {e_i - e_{i+1}} is the canonical identifier of the lattice.
 */
class LaplacianLattice {
  public:
    explicit LaplacianLattice(const Multigraph& g);
    explicit LaplacianLattice(const IMat& laplacian_rows);

    int n() const { return n_; }                  // lattice dimension
    int vertex_count() const { return n_ + 1; }   // ambient coordinates
    const IMat& rows() const { return rows_; }    // all n+1 Laplacian rows
    const IMat& hnf() const { return hnf_; }      // canonical form, n x n
    const BigInt& index() const { return index_; }

    /// Sum of the rows indexed by S.
    IVec subset_sum(const std::vector<int>& s) const;

    /// Membership test with witness: d = sum_i x_i b_i with x_n = 0.
    /// Throws if d is not in A_n.
    std::optional<IVec> contains(const IVec& d) const;

    /// Coefficients x (length n) with p = sum_{i<n} x_i b_i.
    RVec coefficients(const RVec& p) const;

    /// Integer combination sum_i x_i b_i of the working basis.
    IVec combine(const IVec& x) const;

    bool operator==(const LaplacianLattice& o) const { return hnf_ == o.hnf_; }

  private:
    void build();

    int n_;
    IMat rows_;       // n+1 rows, each of length n+1
    IMat coeff_;      // working basis over the A_n basis, n x n
    RMat coeff_inv_;  // exact inverse of coeff_
    IMat hnf_;        // upper-triangular canonical form
    IMat unimod_;     // hnf_ = unimod_ * coeff_
    BigInt index_;
};

/**
 * Exact minimum of d(p, .) over the whole lattice by a certified bounded
 * search. With r an upper bound on the minimum (d(p, O) works, and any
 * cheap candidate tightens it), every minimizer q satisfies, in the TRI
 * case, q_i - p_i >= -r for all i, hence q_i - p_i <= n*r because the
 * differences sum to zero. The finite box is enumerated and filtered by
 * lattice membership.
 */
LatticeDistance h_distance(const LaplacianLattice& lat, const RVec& p,
                           SimplexOrientation o);

/// All lattice points q with d(p, q) <= r under the chosen orientation,
/// sorted lexicographically. Same certified box as h_distance.
std::vector<IVec> lattice_points_within(const LaplacianLattice& lat, const RVec& p,
                                        const Rat& r, SimplexOrientation o);

}  // namespace laplat

#endif  // LAPLAT_LATTICE_HPP
