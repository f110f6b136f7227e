#include "laplat/multigraph.hpp"

#include <algorithm>
#include <queue>

namespace laplat {

Multigraph::Multigraph(int vertex_count) {
    if (vertex_count < 1) throw std::invalid_argument("vertex count must be positive");
    mult_.assign(vertex_count, IVec(vertex_count, 0));
}

Multigraph Multigraph::from_multiplicities(const IMat& mult) {
    const int n1 = static_cast<int>(mult.size());
    Multigraph g(n1);
    for (int i = 0; i < n1; ++i) {
        if (static_cast<int>(mult[i].size()) != n1)
            throw std::invalid_argument("multiplicity matrix is not square");
        if (mult[i][i] != 0) throw std::invalid_argument("self-loops are not allowed");
        for (int j = 0; j < n1; ++j) {
            if (mult[i][j] < 0) throw std::invalid_argument("negative multiplicity");
            if (mult[i][j] != mult[j][i])
                throw std::invalid_argument("asymmetric multiplicity input");
        }
    }
    g.mult_ = mult;
    return g;
}

Int Multigraph::multiplicity(int i, int j) const {
    return mult_.at(i).at(j);
}

void Multigraph::set_multiplicity(int i, int j, Int m) {
    if (i == j) throw std::invalid_argument("self-loops are not allowed");
    if (m < 0) throw std::invalid_argument("negative multiplicity");
    mult_.at(i).at(j) = m;
    mult_.at(j).at(i) = m;
}

void Multigraph::add_edge(int i, int j, Int m) {
    set_multiplicity(i, j, multiplicity(i, j) + m);
}

Int Multigraph::degree(int v) const {
    return vec_sum(mult_.at(v));
}

Int Multigraph::edge_count() const {
    Int m = 0;
    for (int i = 0; i < vertex_count(); ++i)
        for (int j = i + 1; j < vertex_count(); ++j) m += mult_[i][j];
    return m;
}

bool Multigraph::is_connected() const {
    const int n1 = vertex_count();
    std::vector<char> seen(n1, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w = 0; w < n1; ++w)
            if (!seen[w] && mult_[v][w] > 0) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
    }
    return count == n1;
}

Multigraph Multigraph::relabelled(const std::vector<int>& perm) const {
    const int n1 = vertex_count();
    if (static_cast<int>(perm.size()) != n1)
        throw std::invalid_argument("permutation size mismatch");
    Multigraph g(n1);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) g.mult_[i][j] = mult_[perm[i]][perm[j]];
    return g;
}

IMat laplacian(const Multigraph& g) {
    const int n1 = g.vertex_count();
    if (n1 < 2) throw std::invalid_argument("laplacian needs at least 2 vertices");
    IMat q(n1, IVec(n1, 0));
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n1; ++j)
            if (j != i) q[i][j] = -g.multiplicity(i, j);
        q[i][i] = g.degree(i);
    }
    return q;
}

Multigraph graph_from_laplacian(const IMat& q) {
    const int n1 = static_cast<int>(q.size());
    IMat mult(n1, IVec(n1, 0));
    for (int i = 0; i < n1; ++i) {
        if (static_cast<int>(q[i].size()) != n1)
            throw std::invalid_argument("laplacian is not square");
        if (vec_sum(q[i]) != 0)
            throw std::invalid_argument("laplacian row does not sum to zero");
        for (int j = 0; j < n1; ++j) {
            if (i == j) continue;
            if (q[i][j] > 0)
                throw std::invalid_argument("positive off-diagonal laplacian entry");
            if (q[i][j] != q[j][i]) throw std::invalid_argument("laplacian not symmetric");
            mult[i][j] = -q[i][j];
        }
    }
    return Multigraph::from_multiplicities(mult);
}

namespace {

// Fraction-free Bareiss elimination; exact determinant over big integers.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::vector<int> mask_to_side(unsigned mask, int n1) {
    std::vector<int> side;
    for (int v = 0; v < n1; ++v)
        if (mask & (1u << v)) side.push_back(v);
    return side;
}

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Stoer-Wagner global minimum cut on the multiplicity-weighted graph.
// Returns the weight and one side of a minimizing cut.
std::pair<Int, std::vector<int>> stoer_wagner(const Multigraph& g) {
    const int n1 = g.vertex_count();
    IMat w = g.multiplicities();
    std::vector<std::vector<int>> merged(n1);
    for (int v = 0; v < n1; ++v) merged[v] = {v};
    std::vector<char> gone(n1, 0);
    Int best = -1;
    std::vector<int> best_side;
    for (int phase = n1 - 1; phase > 0; --phase) {
        std::vector<char> in_a(n1, 0);
        IVec conn(n1, 0);
        int prev = -1, last = -1;
        for (int step = 0; step <= phase; ++step) {
            int sel = -1;
            for (int v = 0; v < n1; ++v)
                if (!gone[v] && !in_a[v] && (sel < 0 || conn[v] > conn[sel])) sel = v;
            in_a[sel] = 1;
            prev = last;
            last = sel;
            for (int v = 0; v < n1; ++v)
                if (!gone[v] && !in_a[v]) conn[v] += w[sel][v];
        }
        Int cut_of_phase = 0;
        for (int v = 0; v < n1; ++v)
            if (!gone[v] && v != last) cut_of_phase += w[last][v];
        if (best < 0 || cut_of_phase < best) {
            best = cut_of_phase;
            best_side = merged[last];
        }
        // merge last into prev
        gone[last] = 1;
        for (int v : merged[last]) merged[prev].push_back(v);
        for (int v = 0; v < n1; ++v) {
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
        w[prev][prev] = 0;
    }
    std::sort(best_side.begin(), best_side.end());
    return {best, best_side};
}

}  // namespace

BigInt spanning_tree_count(const Multigraph& g) {
    if (!g.is_connected()) return 0;
    const IMat q = laplacian(g);
    const int n = g.vertex_count() - 1;
    std::vector<std::vector<BigInt>> minor(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) minor[i][j] = q[i][j];
    BigInt det = bareiss_determinant(std::move(minor));
    return det < 0 ? -det : det;
}

Int cut_weight_l1(const Multigraph& g, const std::vector<int>& side) {
    std::vector<char> in_s(g.vertex_count(), 0);
    for (int v : side) in_s.at(v) = 1;
    Int w = 0;
    for (int v : side)
        for (int u = 0; u < g.vertex_count(); ++u)
            if (!in_s[u]) w += g.multiplicity(v, u);
    return w;
}

Int cut_weight_linf(const Multigraph& g, const std::vector<int>& side) {
    std::vector<char> in_s(g.vertex_count(), 0);
    for (int v : side) in_s.at(v) = 1;
    Int best = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (in_s[u]) continue;
        Int d = 0;
        for (int v : side) d += g.multiplicity(v, u);
        best = std::max(best, d);
    }
    return best;
}

std::pair<Cut, Int> min_cut_l1(const Multigraph& g) {
    const int n1 = g.vertex_count();
    if (n1 < 2) throw std::invalid_argument("cut needs at least 2 vertices");
    if (!g.is_connected()) {
        // witness: the component of vertex 0
        std::vector<char> seen(n1, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w = 0; w < n1; ++w)
                if (!seen[w] && g.multiplicity(v, w) > 0) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        Cut c;
        for (int v = 0; v < n1; ++v)
            if (seen[v]) c.side.push_back(v);
        c.l1_weight = 0;
        c.linf_weight = 0;
        return {c, 0};
    }
    auto [sw_value, sw_side] = stoer_wagner(g);
    Cut c;
    if (n1 <= 16) {
        // enumeration also yields the lexicographically smallest witness
        Int best = -1;
        std::vector<int> best_side;
        const unsigned total = 1u << n1;
        for (unsigned mask = 1; mask + 1 < total; ++mask) {
            auto side = mask_to_side(mask, n1);
            Int w = cut_weight_l1(g, side);
            if (best < 0 || w < best || (w == best && lex_less(side, best_side))) {
                best = w;
                best_side = side;
            }
        }
        if (best != sw_value)
            throw std::runtime_error("stoer-wagner / enumeration min-cut mismatch");
        c.side = best_side;
    } else {
        c.side = sw_side;
    }
    c.l1_weight = sw_value;
    c.linf_weight = cut_weight_linf(g, c.side);
    return {c, sw_value};
}

std::pair<Cut, Int> min_cut_linf(const Multigraph& g, int guard) {
    const int n1 = g.vertex_count();
    if (n1 < 2) throw std::invalid_argument("cut needs at least 2 vertices");
    if (!g.is_connected()) throw std::invalid_argument("graph is disconnected");
    if (n1 > guard)
        throw std::runtime_error("enumeration limit: " + std::to_string(n1) +
                                 " vertices exceeds guard " + std::to_string(guard));
    Int best = -1;
    std::vector<int> best_side;
    const unsigned total = 1u << n1;
    for (unsigned mask = 1; mask + 1 < total; ++mask) {
        auto side = mask_to_side(mask, n1);
        Int w = cut_weight_linf(g, side);
        if (best < 0 || w < best || (w == best && lex_less(side, best_side))) {
            best = w;
            best_side = side;
        }
    }
    Cut c;
    c.side = best_side;
    c.l1_weight = cut_weight_l1(g, best_side);
    c.linf_weight = best;
    return {c, best};
}

GraphGenus genus(const Multigraph& g) {
    if (!g.is_connected()) throw std::invalid_argument("graph is disconnected");
    return GraphGenus{g.edge_count() - (g.vertex_count() - 1)};
}

}  // namespace laplat
