/**
 * Chip-firing on a multigraph: lending/borrowing moves, linear equivalence
 * of configurations, and the geometric test for equivalence to an
 * effective (componentwise nonnegative) configuration.
 */

#ifndef LAPLAT_CHIPFIRE_HPP
#define LAPLAT_CHIPFIRE_HPP

#include "laplat/lattice.hpp"

namespace laplat {

enum class FireDirection { LEND, BORROW };

/// Total number of chips; invariant under firing.
Int configuration_degree(const IVec& c);

/// Lending at v subtracts row v of the Laplacian; borrowing adds it.
IVec fire(const Multigraph& g, const IVec& c, int v, FireDirection dir);

/// Linear equivalence: c1 ~ c2 iff c1 - c2 lies in the Laplacian lattice.
/// The witness w gives the net firing counts with c1 - c2 = Q.w (w_n = 0).
/// A degree mismatch is a definitive false.
std::optional<IVec> equivalent(const Multigraph& g, const IVec& c1, const IVec& c2);

struct EffectiveCertificate {
    bool effective = false;
    Rat h;                         // distance of the projection to the lattice
    Rat threshold;                 // k/(n+1)
    IVec witness;                  // minimizing lattice point q (when effective)
    IVec representative;           // effective e ~ c, e >= 0 (when effective)
};

/**
 * Whether c is equivalent to an effective configuration, by the geometric
 * criterion: with k = deg(c) and p the H_0-projection of c, c is
 * effective-equivalent iff the reversed-simplex distance from p to the
 * lattice is at most k/(n+1) (boundary inclusive). On success an argmin q
 * yields the representative e = c - q, verified componentwise >= 0.
 */
EffectiveCertificate effective_equivalent(const Multigraph& g, const IVec& c);

}  // namespace laplat

#endif  // LAPLAT_CHIPFIRE_HPP
