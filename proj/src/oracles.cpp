#include "laplat/oracles.hpp"

#include <algorithm>
#include <set>

namespace laplat {

std::vector<OrientationPoint> critical_points(const Multigraph& g, int guard) {
    if (!g.is_connected()) throw std::invalid_argument("graph is disconnected");
    const int n1 = g.vertex_count();
    if (n1 > guard)
        throw std::runtime_error("orientation guard exceeded: " + std::to_string(n1) +
                                 " vertices > " + std::to_string(guard));
    LaplacianLattice lat(g);
    const Rat cov = covering_radius(g);

    std::vector<OrientationPoint> out;
    std::vector<int> pi(n1);
    for (int i = 0; i < n1; ++i) pi[i] = i;
    do {
        OrientationPoint pt;
        pt.pi = pi;
        pt.nu.assign(n1, 0);
        for (int k = 0; k < n1; ++k)
            for (int t = 0; t < k; ++t) pt.nu[pi[k]] += g.multiplicity(pi[t], pi[k]);
        pt.c = project_H0(to_rvec(pt.nu));
        // distance from the nearest lattice point to c (simplices grow out
        // of lattice points), i.e. min over q of d(q, c)
        pt.h = h_distance(lat, pt.c, SimplexOrientation::TRI_BAR).value;
        if (pt.h != cov)
            throw std::logic_error(
                "orientation point does not attain the covering radius");
        out.push_back(std::move(pt));
    } while (std::next_permutation(pi.begin(), pi.end()));
    return out;
}

std::vector<IVec> voronoi_neighbors_grid(const LaplacianLattice& lat, int resolution,
                                         int max_resolution) {
    const int n = lat.n();
    if (n != 2 && n != 3)
        throw std::runtime_error("grid sampling is limited to 2 or 3 dimensions");
    if (resolution < 1 || resolution > max_resolution)
        throw std::runtime_error("grid resolution out of range");
    const int n1 = n + 1;
    const IVec origin(n1, 0);

    std::set<IVec> neighbors;
    IVec a(n, 0);
    for (;;) {
        RVec p(n1, Rat(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n1; ++j) p[j] += Rat(a[i], resolution) * lat.rows()[i][j];
        LatticeDistance d = h_distance(lat, p, SimplexOrientation::TRI);
        // co-minimizers q0, q make q - q0 a neighbour of the origin: by
        // translation invariance, O and q - q0 tie at the point p - q0
        for (const IVec& q0 : d.argmins) {
            for (const IVec& q : d.argmins) {
                if (q == q0) continue;
                IVec diff(n1);
                for (int j = 0; j < n1; ++j) diff[j] = q[j] - q0[j];
                neighbors.insert(std::move(diff));
            }
        }
        int k = 0;
        while (k < n && a[k] == resolution - 1) a[k++] = 0;
        if (k == n) break;
        ++a[k];
    }
    return {neighbors.begin(), neighbors.end()};
}

PerturbedLattice perturb_standard(const Multigraph& g, const Rat& eps) {
    if (eps < 0) throw std::invalid_argument("perturbation must be nonnegative");
    const int n1 = g.vertex_count();
    PerturbedLattice out;
    out.eps = eps;
    out.lambda = to_int_checked(rat_den(eps));
    const Int a = to_int_checked(rat_num(eps));

    IMat mult(n1, IVec(n1, 0));
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            if (i != j) mult[i][j] = out.lambda * g.multiplicity(i, j) + a;
    out.scaled = Multigraph::from_multiplicities(mult);

    out.rows.assign(n1, RVec(n1, Rat(0)));
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n1; ++j) {
            if (i == j) continue;
            out.rows[i][j] = Rat(-g.multiplicity(i, j)) - eps;
            out.rows[i][i] -= out.rows[i][j];
        }
    }
    return out;
}

LimitReport limit_check(const Multigraph& g, const std::vector<Rat>& eps_seq) {
    if (eps_seq.empty()) throw std::invalid_argument("empty perturbation sequence");
    for (size_t k = 0; k < eps_seq.size(); ++k) {
        if (eps_seq[k] <= 0) throw std::invalid_argument("perturbations must be positive");
        if (k && eps_seq[k] >= eps_seq[k - 1])
            throw std::invalid_argument("perturbation sequence must decrease");
    }
    const int n1 = g.vertex_count();
    const Rat nu0 = shortest_vector(g).nu;
    const Rat pac0 = packing_radius(g).first;

    LimitReport rep;
    rep.gaps_nonincreasing = true;
    for (const Rat& eps : eps_seq) {
        PerturbedLattice pert = perturb_standard(g, eps);
        Rat nu_e = shortest_vector(pert.scaled).nu / pert.lambda;
        Rat pac_e = packing_radius(pert.scaled).first / pert.lambda;
        LimitStep step;
        step.eps = eps;
        step.nu_gap = abs(nu_e - nu0);
        step.pac_gap = abs(pac_e - pac0);
        if (!rep.steps.empty() && (step.nu_gap > rep.steps.back().nu_gap ||
                                   step.pac_gap > rep.steps.back().pac_gap))
            rep.gaps_nonincreasing = false;
        rep.steps.push_back(std::move(step));
    }
    const Rat bound = eps_seq.back() * n1;
    rep.final_within_bound =
        rep.steps.back().nu_gap <= bound && rep.steps.back().pac_gap <= bound;
    return rep;
}

}  // namespace laplat
