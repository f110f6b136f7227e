/**
 * Test-only helpers: named small graphs, exhaustive and random graph
 * generation, and independent brute-force oracles that deliberately avoid
 * the library's Hermite-form machinery.
 */

#ifndef LAPLAT_TESTS_BRUTE_HPP
#define LAPLAT_TESTS_BRUTE_HPP

#include <algorithm>
#include <functional>
#include <random>

#include "laplat/invariants.hpp"

namespace laplat::testing {

inline Multigraph complete_graph(int n1, Int mult = 1) {
    Multigraph g(n1);
    for (int i = 0; i < n1; ++i)
        for (int j = i + 1; j < n1; ++j) g.set_multiplicity(i, j, mult);
    return g;
}

inline Multigraph path_graph(int n1) {
    Multigraph g(n1);
    for (int i = 0; i + 1 < n1; ++i) g.set_multiplicity(i, i + 1, 1);
    return g;
}

inline Multigraph cycle_graph(int n1) {
    Multigraph g = path_graph(n1);
    g.set_multiplicity(0, n1 - 1, 1);
    return g;
}

inline Multigraph petersen() {
    Multigraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.set_multiplicity(i, (i + 1) % 5, 1);          // outer cycle
        g.set_multiplicity(i, i + 5, 1);                // spokes
        g.set_multiplicity(5 + i, 5 + (i + 2) % 5, 1);  // inner pentagram
    }
    return g;
}

inline Multigraph k3() { return complete_graph(3); }
inline Multigraph p3() { return path_graph(3); }

/// The running 3-vertex example: multiplicities 3, 2, 2.
inline Multigraph g7() {
    Multigraph g(3);
    g.set_multiplicity(0, 1, 3);
    g.set_multiplicity(0, 2, 2);
    g.set_multiplicity(1, 2, 2);
    return g;
}

/// Every connected multigraph on n1 labelled vertices, multiplicity bound.
inline std::vector<Multigraph> all_connected(int n1, Int max_mult) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n1; ++i)
        for (int j = i + 1; j < n1; ++j) pairs.emplace_back(i, j);
    std::vector<Multigraph> out;
    IVec mult(pairs.size(), 0);
    for (;;) {
        Multigraph g(n1);
        for (size_t e = 0; e < pairs.size(); ++e)
            if (mult[e] > 0) g.set_multiplicity(pairs[e].first, pairs[e].second, mult[e]);
        if (g.is_connected()) out.push_back(g);
        size_t k = 0;
        while (k < pairs.size() && mult[k] == max_mult) mult[k++] = 0;
        if (k == pairs.size()) break;
        ++mult[k];
    }
    return out;
}

inline Multigraph random_connected(std::mt19937& rng, int n1, Int max_mult) {
    std::uniform_int_distribution<Int> dist(0, max_mult);
    for (;;) {
        Multigraph g(n1);
        for (int i = 0; i < n1; ++i)
            for (int j = i + 1; j < n1; ++j) {
                Int m = dist(rng);
                if (m > 0) g.set_multiplicity(i, j, m);
            }
        if (g.is_connected()) return g;
    }
}

/**
 * Independent shortest-vector value: enumerate all nonzero lattice points
 * in the certified box around the origin and minimize |min_i q_i|.
 * Membership goes through the adjugate of the basis matrix (Cramer), not
 * the library's Hermite form. The box bound r is the smallest singleton
 * cut weight (a valid shortest-vector upper bound), so every coordinate of
 * a minimizer lies in [-r, n*r].
 */
inline Rat brute_shortest_vector(const Multigraph& g) {
    const int n1 = g.vertex_count();
    const int n = n1 - 1;
    if (n1 > 4) throw std::logic_error("oracle handles at most 4 vertices");
    const IMat rows = laplacian(g);

    // basis over the A_n coordinates (partial sums), its adjugate and det
    IMat basis(n, IVec(n));
    for (int k = 0; k < n; ++k) {
        Int partial = 0;
        for (int i = 0; i < n; ++i) {
            partial += rows[k][i];
            basis[k][i] = partial;
        }
    }
    auto det3 = [&](const IMat& m) -> Int {
        if (m.size() == 1) return m[0][0];
        if (m.size() == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
        Int d = 0;
        for (int c = 0; c < 3; ++c)
            d += m[0][c] * (m[1][(c + 1) % 3] * m[2][(c + 2) % 3] -
                            m[1][(c + 2) % 3] * m[2][(c + 1) % 3]);
        return d;
    };
    const Int det = det3(basis);
    // x * basis = c is solvable in integers iff every Cramer determinant
    // is divisible by det
    auto member = [&](const IVec& q) {
        IVec c(n);
        Int partial = 0;
        for (int i = 0; i < n; ++i) {
            partial += q[i];
            c[i] = partial;
        }
        for (int k = 0; k < n; ++k) {
            IMat m = basis;
            for (int i = 0; i < n; ++i) m[k][i] = c[i];
            if (det3(m) % det != 0) return false;
        }
        return true;
    };

    Int r = 0;
    for (int i = 0; i < n1; ++i) {
        Int mu = 0;
        for (int v = 0; v < n1; ++v)
            if (v != i) mu = std::max(mu, g.multiplicity(i, v));
        r = i == 0 ? mu : std::min(r, mu);
    }

    Int best = r;
    IVec q(n1, 0);
    auto consider = [&]() {
        Int mn = q[0];
        for (int i = 1; i < n1; ++i) mn = std::min(mn, q[i]);
        Int val = mn < 0 ? -mn : 0;
        bool zero = std::all_of(q.begin(), q.end(), [](Int v) { return v == 0; });
        if (!zero && val < best && member(q)) best = val;
    };
    // q_0..q_{n-1} range over the box, the last coordinate balances the sum
    std::function<void(int, Int)> rec = [&](int idx, Int sum) {
        if (idx == n) {
            q[n] = -sum;
            if (q[n] >= -r && q[n] <= n * r) consider();
            return;
        }
        for (Int v = -r; v <= n * r; ++v) {
            q[idx] = v;
            rec(idx + 1, sum + v);
        }
    };
    rec(0, 0);
    return Rat(best);
}

/**
 * Chip-firing oracle: c is effective-equivalent iff some firing vector w
 * with |w_i| <= box yields c - Q*w >= 0 componentwise.
 */
inline bool brute_effective(const Multigraph& g, const IVec& c, Int box) {
    const int n1 = g.vertex_count();
    const IMat q = laplacian(g);
    IVec w(n1, 0);
    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx == n1) {
            for (int i = 0; i < n1; ++i) {
                Int e = c[i];
                for (int v = 0; v < n1; ++v) e -= q[v][i] * w[v];
                if (e < 0) return false;
            }
            return true;
        }
        for (Int v = -box; v <= box; ++v) {
            w[idx] = v;
            if (rec(idx + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

}  // namespace laplat::testing

#endif  // LAPLAT_TESTS_BRUTE_HPP
