#include "laplat/chipfire.hpp"

#include <algorithm>

namespace laplat {

Int configuration_degree(const IVec& c) { return vec_sum(c); }

IVec fire(const Multigraph& g, const IVec& c, int v, FireDirection dir) {
    const int n1 = g.vertex_count();
    if (static_cast<int>(c.size()) != n1)
        throw std::invalid_argument("configuration length does not match vertex count");
    if (v < 0 || v >= n1) throw std::invalid_argument("vertex out of range");
    const IMat q = laplacian(g);
    IVec out = c;
    for (int i = 0; i < n1; ++i)
        out[i] += dir == FireDirection::LEND ? -q[v][i] : q[v][i];
    return out;
}

std::optional<IVec> equivalent(const Multigraph& g, const IVec& c1, const IVec& c2) {
    const int n1 = g.vertex_count();
    if (static_cast<int>(c1.size()) != n1 || static_cast<int>(c2.size()) != n1)
        throw std::invalid_argument("configuration length does not match vertex count");
    if (configuration_degree(c1) != configuration_degree(c2)) return std::nullopt;
    IVec diff(n1);
    for (int i = 0; i < n1; ++i) diff[i] = c1[i] - c2[i];
    return LaplacianLattice(g).contains(diff);
}

EffectiveCertificate effective_equivalent(const Multigraph& g, const IVec& c) {
    const int n1 = g.vertex_count();
    if (static_cast<int>(c.size()) != n1)
        throw std::invalid_argument("configuration length does not match vertex count");
    EffectiveCertificate cert;
    const Int k = configuration_degree(c);
    cert.threshold = Rat(k, n1);
    if (k < 0) return cert;  // no effective configuration has negative degree

    RVec p(n1);
    for (int i = 0; i < n1; ++i) p[i] = c[i] - Rat(k, n1);
    LaplacianLattice lat(g);
    LatticeDistance dist = h_distance(lat, p, SimplexOrientation::TRI_BAR);
    cert.h = dist.value;
    if (dist.value > cert.threshold) return cert;
    cert.effective = true;
    cert.witness = dist.argmins.front();
    cert.representative.resize(n1);
    for (int i = 0; i < n1; ++i) {
        cert.representative[i] = c[i] - cert.witness[i];
        if (cert.representative[i] < 0)
            throw std::logic_error("effective representative has a negative entry");
    }
    return cert;
}

}  // namespace laplat
