#include "laplat/delaunay.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace laplat {

namespace {

std::vector<int> mask_to_side(unsigned mask, int n1) {
    std::vector<int> side;
    for (int v = 0; v < n1; ++v)
        if (mask & (1u << v)) side.push_back(v);
    return side;
}

RVec full_gauge_coefficients(const LaplacianLattice& lat, const RVec& p) {
    // length n+1, last entry gauged to zero
    RVec a = lat.coefficients(p);
    a.push_back(Rat(0));
    return a;
}

}  // namespace

int DelaunayPolytope::vertex_index(const IVec& point) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].point == point) return static_cast<int>(i);
    return -1;
}

DelaunayPolytope polytope(const LaplacianLattice& lat, int guard) {
    const int n1 = lat.vertex_count();
    if (n1 > guard)
        throw std::runtime_error("polytope guard exceeded: " + std::to_string(n1) +
                                 " vertices > " + std::to_string(guard));
    DelaunayPolytope poly;
    poly.n = lat.n();
    const unsigned total = 1u << n1;
    std::map<unsigned, int> index_of_mask;
    for (unsigned mask = 1; mask + 1 < total; ++mask) {
        auto side = mask_to_side(mask, n1);
        index_of_mask[mask] = static_cast<int>(poly.vertices.size());
        poly.vertices.push_back({side, lat.subset_sum(side)});
    }
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n1; ++j) {
            if (i == j) continue;
            PolytopeFacet f;
            f.i = i;
            f.j = j;
            for (unsigned mask = 1; mask + 1 < total; ++mask)
                if ((mask & (1u << i)) && !(mask & (1u << j)))
                    f.vertices.push_back(index_of_mask[mask]);
            poly.facets.push_back(std::move(f));
        }
    }
    for (unsigned mask = 1; mask + 1 < total; ++mask) {
        for (int j = 0; j < n1; ++j) {
            if (mask & (1u << j)) continue;
            unsigned grown = mask | (1u << j);
            if (grown + 1 >= total) continue;  // S + {j} must stay proper
            int a = index_of_mask[mask], b = index_of_mask[grown];
            poly.edges.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    std::sort(poly.edges.begin(), poly.edges.end());
    poly.edges.erase(std::unique(poly.edges.begin(), poly.edges.end()), poly.edges.end());
    return poly;
}

int vertex_facet_degree(const DelaunayPolytope& poly, const IVec& v) {
    const int idx = poly.vertex_index(v);
    if (idx < 0) throw std::invalid_argument("point is not a polytope vertex");
    int count = 0;
    for (const auto& f : poly.facets)
        if (std::binary_search(f.vertices.begin(), f.vertices.end(), idx)) ++count;
    const long long k = static_cast<long long>(poly.vertices[idx].side.size());
    if (count != k * (poly.n + 1 - k))
        throw std::logic_error("facet degree does not match k(n+1-k)");
    return count;
}

SimplexCertificate simplex_contains(const LaplacianLattice& lat,
                                    const std::vector<int>& sigma, const RVec& p) {
    const int n1 = lat.vertex_count();
    if (static_cast<int>(sigma.size()) != n1)
        throw std::invalid_argument("permutation size mismatch");
    RVec gamma = full_gauge_coefficients(lat, p);
    SimplexCertificate cert;
    cert.lambda.resize(n1);
    const Rat shift = Rat(1) - gamma[sigma[0]];
    for (int i = 0; i < n1; ++i) cert.lambda[i] = gamma[sigma[i]] + shift;
    cert.contained = true;
    for (int i = 0; i + 1 < n1; ++i)
        if (cert.lambda[i] < cert.lambda[i + 1]) cert.contained = false;
    if (cert.lambda[n1 - 1] < 0) cert.contained = false;
    return cert;
}

LocatedCell locate(const LaplacianLattice& lat, const RVec& p, int guard) {
    require_h0(p);
    const int n1 = lat.vertex_count();
    const int n = lat.n();
    if (n1 > guard)
        throw std::runtime_error("locate guard exceeded: " + std::to_string(n1) +
                                 " vertices > " + std::to_string(guard));
    RVec gamma = full_gauge_coefficients(lat, p);
    IVec fl(n);
    for (int i = 0; i < n; ++i) fl[i] = to_int_checked(rat_floor(gamma[i]));
    IVec q = lat.combine(fl);
    RVec residual(n1);
    for (int i = 0; i < n; ++i) residual[i] = gamma[i] - fl[i];
    residual[n] = 0;

    std::vector<int> sigma(n1);
    for (int i = 0; i < n1; ++i) sigma[i] = i;
    std::stable_sort(sigma.begin(), sigma.end(),
                     [&](int a, int b) { return residual[a] > residual[b]; });

    RVec shifted(n1);
    for (int i = 0; i < n1; ++i) shifted[i] = p[i] - q[i];
    SimplexCertificate cert = simplex_contains(lat, sigma, shifted);
    if (cert.contained) return {sigma, q, cert};

    // Exhaustive fallback over nearby translates and all orderings.
    std::vector<int> perm(n1);
    for (int i = 0; i < n1; ++i) perm[i] = i;
    IVec delta(n, -1);
    for (;;) {
        IVec x(n);
        for (int i = 0; i < n; ++i) x[i] = fl[i] + delta[i];
        IVec qq = lat.combine(x);
        RVec sh(n1);
        for (int i = 0; i < n1; ++i) sh[i] = p[i] - qq[i];
        std::vector<int> s = perm;
        do {
            SimplexCertificate c = simplex_contains(lat, s, sh);
            if (c.contained) return {s, qq, c};
        } while (std::next_permutation(s.begin(), s.end()));
        int k = 0;
        while (k < n && delta[k] == 1) delta[k++] = -1;
        if (k == n) break;
        ++delta[k];
    }
    throw std::logic_error("locate: no containing cell found");
}

namespace {

// Faithful linear coordinates for H_0: the partial-sum map onto R^n.
RMat embed(const std::vector<PolytopeVertex>& verts, int n) {
    RMat pts;
    for (const auto& v : verts) {
        RVec c(n);
        Int partial = 0;
        for (int i = 0; i < n; ++i) {
            partial += v.point[i];
            c[i] = partial;
        }
        pts.push_back(std::move(c));
    }
    return pts;
}

Rat cross2(const RVec& o, const RVec& a, const RVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

FVector hull_2d(RMat pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const int m = static_cast<int>(pts.size());
    RMat hull;
    for (int pass = 0; pass < 2; ++pass) {
        size_t start = hull.size();
        for (int i = 0; i < m; ++i) {
            const RVec& pt = pts[pass == 0 ? i : m - 1 - i];
            while (hull.size() >= start + 2 &&
                   cross2(hull[hull.size() - 2], hull.back(), pt) <= 0)
                hull.pop_back();
            hull.push_back(pt);
        }
        hull.pop_back();
    }
    long long f0 = static_cast<long long>(hull.size());
    return {f0, f0, f0};
}

FVector hull_3d(const RMat& pts) {
    const int m = static_cast<int>(pts.size());
    // supporting plane key: primitive integer (normal, offset), sign-normalized
    std::map<std::vector<BigInt>, std::vector<int>> planes;
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            for (int c = b + 1; c < m; ++c) {
                RVec u(3), v(3), nrm(3);
                for (int k = 0; k < 3; ++k) {
                    u[k] = pts[b][k] - pts[a][k];
                    v[k] = pts[c][k] - pts[a][k];
                }
                nrm[0] = u[1] * v[2] - u[2] * v[1];
                nrm[1] = u[2] * v[0] - u[0] * v[2];
                nrm[2] = u[0] * v[1] - u[1] * v[0];
                if (nrm[0] == 0 && nrm[1] == 0 && nrm[2] == 0) continue;
                Rat offset = nrm[0] * pts[a][0] + nrm[1] * pts[a][1] + nrm[2] * pts[a][2];
                bool any_pos = false, any_neg = false;
                for (int p = 0; p < m; ++p) {
                    Rat s = nrm[0] * pts[p][0] + nrm[1] * pts[p][1] + nrm[2] * pts[p][2] -
                            offset;
                    if (s > 0) any_pos = true;
                    if (s < 0) any_neg = true;
                }
                if (any_pos && any_neg) continue;
                // canonical key
                std::vector<Rat> key_r = {nrm[0], nrm[1], nrm[2], offset};
                BigInt lcm = 1;
                for (const Rat& x : key_r)
                    lcm = boost::multiprecision::lcm(lcm, rat_den(x));
                std::vector<BigInt> key(4);
                BigInt g = 0;
                for (int k = 0; k < 4; ++k) {
                    key[k] = rat_num(key_r[k] * lcm);
                    g = boost::multiprecision::gcd(g, abs(key[k]));
                }
                for (int k = 0; k < 4; ++k) key[k] /= g;
                for (int k = 0; k < 4; ++k) {
                    if (key[k] == 0) continue;
                    if (key[k] < 0)
                        for (int t = 0; t < 4; ++t) key[t] = -key[t];
                    break;
                }
                if (planes.count(key)) continue;
                std::vector<int> members;
                for (int p = 0; p < m; ++p) {
                    Rat s = nrm[0] * pts[p][0] + nrm[1] * pts[p][1] + nrm[2] * pts[p][2];
                    if (s == offset) members.push_back(p);
                }
                planes[key] = std::move(members);
            }
        }
    }
    std::vector<int> plane_count(m, 0);
    for (const auto& [key, members] : planes)
        for (int p : members) ++plane_count[p];
    long long f0 = 0;
    for (int p = 0; p < m; ++p)
        if (plane_count[p] >= 3) ++f0;
    long long f1 = 0;
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            if (plane_count[a] < 3 || plane_count[b] < 3) continue;
            int shared = 0;
            for (const auto& [key, members] : planes)
                if (std::binary_search(members.begin(), members.end(), a) &&
                    std::binary_search(members.begin(), members.end(), b))
                    ++shared;
            if (shared >= 2) ++f1;
        }
    }
    return {f0, f1, static_cast<long long>(planes.size())};
}

}  // namespace

FVector hull_f_vector_check(const DelaunayPolytope& poly, int guard) {
    const int n = poly.n;
    if (n > guard || n > 3)
        throw std::runtime_error("exact hull guard exceeded: n = " + std::to_string(n));
    RMat pts = embed(poly.vertices, n);
    FVector fv = n == 2 ? hull_2d(pts) : hull_3d(pts);
    const long long expect_f0 = (1ll << (n + 1)) - 2;
    const long long expect_top = static_cast<long long>(n) * (n + 1);
    if (fv.f0 != expect_f0)
        throw std::logic_error("hull vertex count differs from 2^{n+1}-2");
    if (fv.f_top != expect_top)
        throw std::logic_error("hull facet count differs from n(n+1)");
    return fv;
}

RVec supporting_functional(const LaplacianLattice& lat, const std::vector<int>& side) {
    const int n1 = lat.vertex_count();
    const Int k = static_cast<Int>(side.size());
    if (k < 1 || k > n1 - 1) throw std::invalid_argument("subset must be nontrivial");
    std::vector<char> in_s(n1, 0);
    for (int v : side) in_s.at(v) = 1;
    // A point of the open cone: positive on S, negative off S, zero sum.
    RVec q(n1);
    for (int i = 0; i < n1; ++i) q[i] = in_s[i] ? Rat(n1 - k) : Rat(-k);
    RVec w = lat.coefficients(q);
    w.push_back(Rat(0));

    auto eval = [&](const IVec& pt) {
        Rat s = 0;
        for (int i = 0; i < n1; ++i) s += w[i] * pt[i];
        return s;
    };
    const Rat target = eval(lat.subset_sum(side));
    const unsigned total = 1u << n1;
    for (unsigned mask = 1; mask + 1 < total; ++mask) {
        auto other = mask_to_side(mask, n1);
        if (other == side) continue;
        if (eval(lat.subset_sum(other)) >= target)
            throw std::logic_error("supporting functional is not strictly maximal");
    }
    return w;
}

bool verify_facet_supports(const LaplacianLattice& lat, const DelaunayPolytope& poly) {
    const int n1 = lat.vertex_count();
    for (const auto& f : poly.facets) {
        for (size_t v = 0; v < poly.vertices.size(); ++v) {
            // coefficient of b_i in the representation gauged so b_j has
            // coefficient zero; the facet hyperplane is "coefficient = 1"
            RVec gamma = full_gauge_coefficients(lat, to_rvec(poly.vertices[v].point));
            Rat beta = gamma[f.i] - gamma[f.j];
            const bool member =
                std::binary_search(f.vertices.begin(), f.vertices.end(), static_cast<int>(v));
            if (member && beta != 1) return false;
            if (!member && beta >= 1) return false;
        }
    }
    return (int)poly.facets.size() == poly.n * n1;
}

std::vector<std::vector<IVec>> triangle_classes(const LaplacianLattice& lat, int guard) {
    const int n1 = lat.vertex_count();
    if (n1 > guard)
        throw std::runtime_error("triangle class guard exceeded");
    std::vector<int> sigma(n1);
    for (int i = 0; i < n1; ++i) sigma[i] = i;
    std::set<std::vector<IVec>> classes;
    do {
        std::vector<IVec> cell;
        IVec acc(n1, 0);
        for (int i = 0; i < n1 - 1; ++i) {
            for (int j = 0; j < n1; ++j) acc[j] += lat.rows()[sigma[i]][j];
            cell.push_back(acc);
        }
        cell.push_back(IVec(n1, 0));
        // canonical representative modulo lattice translation
        std::vector<IVec> best;
        for (const IVec& v : cell) {
            std::vector<IVec> moved;
            for (const IVec& p : cell) {
                IVec d(n1);
                for (int j = 0; j < n1; ++j) d[j] = p[j] - v[j];
                moved.push_back(std::move(d));
            }
            std::sort(moved.begin(), moved.end());
            if (best.empty() || moved < best) best = std::move(moved);
        }
        classes.insert(std::move(best));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return {classes.begin(), classes.end()};
}

}  // namespace laplat
