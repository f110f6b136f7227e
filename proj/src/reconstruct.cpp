#include "laplat/reconstruct.hpp"

#include <algorithm>
#include <map>

namespace laplat {

namespace {

std::string point_to_string(const IVec& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

}  // namespace

IMat reconstruct_laplacian(const std::vector<IVec>& vertex_set) {
    if (vertex_set.empty())
        throw std::invalid_argument("not a Delaunay polytope of a connected multigraph: "
                                    "empty vertex set");
    const int n1 = static_cast<int>(vertex_set[0].size());
    for (const IVec& p : vertex_set) {
        if (static_cast<int>(p.size()) != n1)
            throw std::invalid_argument("vertex coordinates have mixed lengths");
        require_h0(p);
    }
    IMat rows(n1);
    for (int i = 0; i < n1; ++i) {
        // cone C_i: nonnegative at i, nonpositive elsewhere
        const IVec* best = nullptr;
        bool tie = false;
        for (const IVec& p : vertex_set) {
            bool in_cone = p[i] >= 0;
            for (int j = 0; in_cone && j < n1; ++j)
                if (j != i && p[j] > 0) in_cone = false;
            if (!in_cone) continue;
            if (!best || p[i] > (*best)[i]) {
                best = &p;
                tie = false;
            } else if (p[i] == (*best)[i] && p != *best) {
                tie = true;
            }
        }
        if (!best)
            throw std::invalid_argument(
                "not a Delaunay polytope of a connected multigraph: cone " +
                std::to_string(i) + " is empty");
        if (tie)
            throw std::invalid_argument(
                "not a Delaunay polytope of a connected multigraph: cone " +
                std::to_string(i) + " has tied maximizers at " + point_to_string(*best));
        rows[i] = *best;
    }
    Multigraph g = graph_from_laplacian(rows);  // validates shape
    if (!g.is_connected())
        throw std::invalid_argument(
            "not a Delaunay polytope of a connected multigraph: recovered graph "
            "is disconnected");
    DelaunayPolytope regen = polytope(LaplacianLattice(g));
    std::vector<IVec> expect, given = vertex_set;
    for (const auto& v : regen.vertices) expect.push_back(v.point);
    std::sort(expect.begin(), expect.end());
    std::sort(given.begin(), given.end());
    given.erase(std::unique(given.begin(), given.end()), given.end());
    if (expect != given)
        throw std::invalid_argument(
            "not a Delaunay polytope of a connected multigraph: regenerated "
            "vertex set differs from the input");
    return rows;
}

Multigraph reconstruct_graph(const std::vector<IVec>& vertex_set) {
    return graph_from_laplacian(reconstruct_laplacian(vertex_set));
}

namespace {

bool extend_isomorphism(const Multigraph& a, const Multigraph& b, std::vector<int>& perm,
                        std::vector<char>& used, int next) {
    const int n1 = a.vertex_count();
    if (next == n1) return true;
    for (int img = 0; img < n1; ++img) {
        if (used[img] || a.degree(next) != b.degree(img)) continue;
        bool ok = true;
        for (int u = 0; ok && u < next; ++u)
            if (a.multiplicity(next, u) != b.multiplicity(img, perm[u])) ok = false;
        if (!ok) continue;
        perm[next] = img;
        used[img] = 1;
        if (extend_isomorphism(a, b, perm, used, next + 1)) return true;
        used[img] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> graphs_isomorphic(const Multigraph& a, const Multigraph& b,
                                                  int guard) {
    if (a.vertex_count() != b.vertex_count()) return std::nullopt;
    const int n1 = a.vertex_count();
    if (n1 > guard)
        throw std::runtime_error("isomorphism guard exceeded: " + std::to_string(n1) +
                                 " vertices > " + std::to_string(guard));
    if (a.edge_count() != b.edge_count()) return std::nullopt;
    IVec da(n1), db(n1);
    for (int v = 0; v < n1; ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    IVec sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;

    std::vector<int> perm(n1, -1);
    std::vector<char> used(n1, 0);
    if (!extend_isomorphism(a, b, perm, used, 0)) return std::nullopt;
    // conjugation identity, checked entrywise
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n1; ++v)
            if (b.multiplicity(perm[u], perm[v]) != a.multiplicity(u, v))
                throw std::logic_error("isomorphism witness fails conjugation check");
    return perm;
}

bool polytopes_identical(std::vector<IVec> v1, std::vector<IVec> v2) {
    std::sort(v1.begin(), v1.end());
    std::sort(v2.begin(), v2.end());
    v1.erase(std::unique(v1.begin(), v1.end()), v1.end());
    v2.erase(std::unique(v2.begin(), v2.end()), v2.end());
    return v1 == v2;
}

std::optional<std::vector<int>> polytopes_congruent(const std::vector<IVec>& v1,
                                                    const std::vector<IVec>& v2) {
    Multigraph g1 = reconstruct_graph(v1);
    Multigraph g2 = reconstruct_graph(v2);
    return graphs_isomorphic(g1, g2);
}

std::vector<LatticeClass> lattice_census(int n1, Int max_mult) {
    if (n1 > 4 || max_mult > 3)
        throw std::runtime_error("census guard exceeded (at most 4 vertices, "
                                 "multiplicity at most 3)");
    if (n1 < 2) throw std::invalid_argument("census needs at least 2 vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n1; ++i)
        for (int j = i + 1; j < n1; ++j) pairs.emplace_back(i, j);
    const size_t np = pairs.size();

    std::map<IMat, std::vector<Multigraph>> classes;
    IVec mult(np, 0);
    for (;;) {
        Multigraph g(n1);
        for (size_t e = 0; e < np; ++e)
            if (mult[e] > 0) g.set_multiplicity(pairs[e].first, pairs[e].second, mult[e]);
        if (g.is_connected()) classes[LaplacianLattice(g).hnf()].push_back(g);
        size_t k = 0;
        while (k < np && mult[k] == max_mult) mult[k++] = 0;
        if (k == np) break;
        ++mult[k];
    }

    std::vector<LatticeClass> out;
    for (auto& [hnf, graphs] : classes) {
        std::sort(graphs.begin(), graphs.end(),
                  [](const Multigraph& x, const Multigraph& y) {
                      return x.multiplicities() < y.multiplicities();
                  });
        // the theorem's mechanism: same lattice, still distinct polytopes
        std::vector<std::vector<IVec>> polys;
        for (const Multigraph& g : graphs) {
            std::vector<IVec> pts;
            for (const auto& v : polytope(LaplacianLattice(g)).vertices)
                pts.push_back(v.point);
            polys.push_back(std::move(pts));
        }
        for (size_t i = 0; i < polys.size(); ++i)
            for (size_t j = i + 1; j < polys.size(); ++j)
                if (polytopes_identical(polys[i], polys[j]))
                    throw std::logic_error(
                        "two distinct graphs in a census class share a polytope");
        out.push_back({hnf, std::move(graphs)});
    }
    return out;
}

std::vector<Multigraph> enumerate_graphs_with_lattice(const LaplacianLattice& lat,
                                                      Int max_mult) {
    for (const auto& cls : lattice_census(lat.vertex_count(), max_mult))
        if (cls.hnf == lat.hnf()) return cls.graphs;
    return {};
}

}  // namespace laplat
