#include "laplat/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace laplat {

void require_h0(const RVec& p) {
    if (vec_sum(p) != 0)
        throw std::invalid_argument("point is not in H_0 (coordinates must sum to zero)");
}

void require_h0(const IVec& p) {
    if (vec_sum(p) != 0)
        throw std::invalid_argument("point is not in H_0 (coordinates must sum to zero)");
}

RVec project_H0(const RVec& v) {
    const int n1 = static_cast<int>(v.size());
    Rat mean = vec_sum(v) / n1;
    RVec r(n1);
    for (int i = 0; i < n1; ++i) r[i] = v[i] - mean;
    return r;
}

Rat simplicial_distance(const RVec& p, const RVec& q, SimplexOrientation o) {
    if (p.size() != q.size()) throw std::invalid_argument("dimension mismatch");
    require_h0(p);
    require_h0(q);
    Rat m;
    bool first = true;
    for (size_t i = 0; i < p.size(); ++i) {
        Rat d = (o == SimplexOrientation::TRI) ? q[i] - p[i] : p[i] - q[i];
        if (first || d < m) {
            m = d;
            first = false;
        }
    }
    return m < 0 ? -m : m;
}

Rat simplicial_distance(const IVec& p, const IVec& q, SimplexOrientation o) {
    return simplicial_distance(to_rvec(p), to_rvec(q), o);
}

RVec max_sum(const RVec& p, const RVec& q) {
    if (p.size() != q.size()) throw std::invalid_argument("dimension mismatch");
    RVec r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = std::max(p[i], q[i]);
    return r;
}

IVec max_sum(const IVec& p, const IVec& q) {
    if (p.size() != q.size()) throw std::invalid_argument("dimension mismatch");
    IVec r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = std::max(p[i], q[i]);
    return r;
}

std::pair<RVec, Rat> triangle_midpoint(const RVec& p) {
    require_h0(p);
    const int n1 = static_cast<int>(p.size());
    RVec ms(n1);
    Rat norm1 = 0;
    for (int i = 0; i < n1; ++i) {
        ms[i] = p[i] > 0 ? p[i] : Rat(0);
        norm1 += ms[i];
    }
    RVec m = project_H0(ms);
    Rat r = norm1 / n1;
    if (simplicial_distance(RVec(n1, Rat(0)), m, SimplexOrientation::TRI) != r ||
        simplicial_distance(p, m, SimplexOrientation::TRI) != r)
        throw std::logic_error("midpoint postcondition failed");
    return {m, r};
}

LaplacianLattice::LaplacianLattice(const Multigraph& g)
    : LaplacianLattice(laplacian(g)) {}

LaplacianLattice::LaplacianLattice(const IMat& laplacian_rows)
    : n_(static_cast<int>(laplacian_rows.size()) - 1), rows_(laplacian_rows) {
    if (n_ < 1) throw std::invalid_argument("lattice needs at least 2 coordinates");
    for (const auto& row : rows_) {
        if (static_cast<int>(row.size()) != n_ + 1)
            throw std::invalid_argument("laplacian rows have inconsistent length");
        if (vec_sum(row) != 0)
            throw std::invalid_argument("laplacian row does not sum to zero");
    }
    build();
}

void LaplacianLattice::build() {
    // Working basis rows expressed over the A_n basis {e_i - e_{i+1}}:
    // the coefficient of e_i - e_{i+1} is the i-th partial sum.
    coeff_.assign(n_, IVec(n_, 0));
    for (int k = 0; k < n_; ++k) {
        Int partial = 0;
        for (int i = 0; i < n_; ++i) {
            partial += rows_[k][i];
            coeff_[k][i] = partial;
        }
    }

    // Row-style Hermite normal form with a tracked unimodular transform.
    std::vector<std::vector<BigInt>> m(n_, std::vector<BigInt>(n_));
    std::vector<std::vector<BigInt>> u(n_, std::vector<BigInt>(n_, 0));
    for (int i = 0; i < n_; ++i) {
        u[i][i] = 1;
        for (int j = 0; j < n_; ++j) m[i][j] = coeff_[i][j];
    }
    auto row_sub = [&](int dst, int src, const BigInt& q) {
        for (int j = 0; j < n_; ++j) {
            m[dst][j] -= q * m[src][j];
            u[dst][j] -= q * u[src][j];
        }
    };
    for (int col = 0; col < n_; ++col) {
        for (;;) {
            int r = -1;
            for (int i = col + 1; i < n_; ++i)
                if (m[i][col] != 0) {
                    r = i;
                    break;
                }
            if (r < 0) break;
            if (m[col][col] == 0 || abs(m[r][col]) < abs(m[col][col])) {
                std::swap(m[col], m[r]);
                std::swap(u[col], u[r]);
                continue;
            }
            row_sub(r, col, m[r][col] / m[col][col]);
        }
        if (m[col][col] == 0)
            throw std::runtime_error("rank-deficient basis: source graph is disconnected");
        if (m[col][col] < 0) {
            for (int j = 0; j < n_; ++j) {
                m[col][j] = -m[col][j];
                u[col][j] = -u[col][j];
            }
        }
        for (int r = 0; r < col; ++r) {
            BigInt q = m[r][col] / m[col][col];
            if (m[r][col] - q * m[col][col] < 0) q -= 1;
            if (q != 0) row_sub(r, col, q);
        }
    }

    hnf_.assign(n_, IVec(n_));
    unimod_.assign(n_, IVec(n_));
    index_ = 1;
    for (int i = 0; i < n_; ++i) {
        index_ *= m[i][i];
        for (int j = 0; j < n_; ++j) {
            hnf_[i][j] = to_int_checked(m[i][j]);
            unimod_[i][j] = to_int_checked(u[i][j]);
        }
    }

    // Exact inverse of the coefficient matrix (Gauss-Jordan over rationals).
    RMat a(n_, RVec(2 * n_, Rat(0)));
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) a[i][j] = coeff_[i][j];
        a[i][n_ + i] = 1;
    }
    for (int col = 0; col < n_; ++col) {
        int piv = -1;
        for (int r = col; r < n_; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::runtime_error("coefficient matrix is singular");
        std::swap(a[col], a[piv]);
        Rat d = a[col][col];
        for (int j = 0; j < 2 * n_; ++j) a[col][j] /= d;
        for (int r = 0; r < n_; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (int j = 0; j < 2 * n_; ++j) a[r][j] -= f * a[col][j];
        }
    }
    coeff_inv_.assign(n_, RVec(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) coeff_inv_[i][j] = a[i][n_ + j];
}

IVec LaplacianLattice::subset_sum(const std::vector<int>& s) const {
    IVec v(n_ + 1, 0);
    for (int i : s)
        for (int j = 0; j <= n_; ++j) v[j] += rows_.at(i)[j];
    return v;
}

IVec LaplacianLattice::combine(const IVec& x) const {
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("coefficient size mismatch");
    IVec v(n_ + 1, 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j <= n_; ++j) v[j] += x[i] * rows_[i][j];
    return v;
}

std::optional<IVec> LaplacianLattice::contains(const IVec& d) const {
    if (static_cast<int>(d.size()) != n_ + 1)
        throw std::invalid_argument("dimension mismatch");
    if (vec_sum(d) != 0) throw std::invalid_argument("point is not in A_n");
    IVec c(n_);
    Int partial = 0;
    for (int i = 0; i < n_; ++i) {
        partial += d[i];
        c[i] = partial;
    }
    // Solve y * hnf = c by forward substitution over the integers.
    IVec y(n_);
    for (int j = 0; j < n_; ++j) {
        Int rem = c[j];
        for (int i = 0; i < j; ++i) rem -= y[i] * hnf_[i][j];
        if (rem % hnf_[j][j] != 0) return std::nullopt;
        y[j] = rem / hnf_[j][j];
    }
    IVec x(n_ + 1, 0);
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i) x[j] += y[i] * unimod_[i][j];
    if (combine(IVec(x.begin(), x.end() - 1)) != d)
        throw std::logic_error("membership witness failed verification");
    return x;
}

RVec LaplacianLattice::coefficients(const RVec& p) const {
    if (static_cast<int>(p.size()) != n_ + 1)
        throw std::invalid_argument("dimension mismatch");
    require_h0(p);
    RVec c(n_);
    Rat partial = 0;
    for (int i = 0; i < n_; ++i) {
        partial += p[i];
        c[i] = partial;
    }
    RVec x(n_, Rat(0));
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i) x[j] += c[i] * coeff_inv_[i][j];
    return x;
}

namespace {

// Membership without witness extraction; hot path of the box search.
bool contains_fast(const IMat& hnf, const IVec& q) {
    const int n = static_cast<int>(hnf.size());
    IVec y(n);
    Int partial = 0;
    for (int j = 0; j < n; ++j) {
        partial += q[j];
        Int rem = partial;
        for (int i = 0; i < j; ++i) rem -= y[i] * hnf[i][j];
        if (rem % hnf[j][j] != 0) return false;
        y[j] = rem / hnf[j][j];
    }
    return true;
}

struct BoxSearch {
    const IMat* hnf;
    int n1;
    IVec scaled_p;  // D * p
    Int denom;      // D
    IVec lo, hi;
    IVec suffix_lo, suffix_hi;  // suffix sums of lo/hi

    Int best;
    bool collect_all = false;  // keep everything with value <= best
    std::vector<IVec> argmins;
    IVec current;

    void run() {
        current.assign(n1, 0);
        recurse(0, 0);
    }

    void recurse(int idx, Int partial) {
        if (idx == n1 - 1) {
            Int last = -partial;
            if (last < lo[idx] || last > hi[idx]) return;
            current[idx] = last;
            consider();
            return;
        }
        for (Int v = lo[idx]; v <= hi[idx]; ++v) {
            Int s = partial + v;
            // the remaining coordinates must be able to cancel s
            if (-s < suffix_lo[idx + 1] || -s > suffix_hi[idx + 1]) continue;
            current[idx] = v;
            recurse(idx + 1, s);
        }
    }

    void consider() {
        Int mindiff = denom * current[0] - scaled_p[0];
        for (int i = 1; i < n1; ++i)
            mindiff = std::min(mindiff, denom * current[i] - scaled_p[i]);
        Int val = mindiff < 0 ? -mindiff : 0;
        if (val > best) return;
        if (!contains_fast(*hnf, current)) return;
        if (val < best && !collect_all) {
            best = val;
            argmins.clear();
        }
        argmins.push_back(current);
    }
};

LatticeDistance h_distance_tri(const LaplacianLattice& lat, const RVec& p) {
    const int n1 = lat.vertex_count();
    const int n = lat.n();

    // Common denominator; all arithmetic below is integral.
    BigInt big_d = 1;
    for (const Rat& x : p) big_d = boost::multiprecision::lcm(big_d, rat_den(x));
    const Int d = to_int_checked(big_d);
    IVec sp(n1);
    for (int i = 0; i < n1; ++i) sp[i] = to_int_checked(rat_num(p[i] * d));

    // Upper bound on the minimum: distance to the origin, tightened by the
    // rounded-coefficient candidate.
    Int r = 0;
    for (Int v : sp) r = std::max(r, v);  // d * d_tri(p, O)
    {
        RVec x = lat.coefficients(p);
        IVec xi(n);
        for (int i = 0; i < n; ++i)
            xi[i] = to_int_checked(rat_floor(x[i] + Rat(1, 2)));
        IVec cand = lat.combine(xi);
        Int mindiff = d * cand[0] - sp[0];
        for (int i = 1; i < n1; ++i) mindiff = std::min(mindiff, d * cand[i] - sp[i]);
        Int cand_val = mindiff < 0 ? -mindiff : 0;
        r = std::min(r, cand_val);
    }

    // Any minimizer q obeys q_i - p_i in [-r/d, n*r/d].
    BoxSearch search;
    search.hnf = &lat.hnf();
    search.n1 = n1;
    search.scaled_p = sp;
    search.denom = d;
    search.lo.resize(n1);
    search.hi.resize(n1);
    for (int i = 0; i < n1; ++i) {
        // ceil((sp_i - r) / d) and floor((sp_i + n*r) / d)
        Int a = sp[i] - r;
        search.lo[i] = a >= 0 ? (a + d - 1) / d : -((-a) / d);
        Int b = sp[i] + n * r;
        search.hi[i] = b >= 0 ? b / d : -((-b + d - 1) / d);
    }
    search.suffix_lo.assign(n1 + 1, 0);
    search.suffix_hi.assign(n1 + 1, 0);
    for (int i = n1 - 1; i >= 0; --i) {
        search.suffix_lo[i] = search.suffix_lo[i + 1] + search.lo[i];
        search.suffix_hi[i] = search.suffix_hi[i + 1] + search.hi[i];
    }
    search.best = r;
    search.run();

    if (search.argmins.empty())
        throw std::logic_error("bounded search found no lattice point in its box");
    std::sort(search.argmins.begin(), search.argmins.end());
    Rat value(search.best, d);
    return {value, std::move(search.argmins)};
}

}  // namespace

LatticeDistance h_distance(const LaplacianLattice& lat, const RVec& p,
                           SimplexOrientation o) {
    require_h0(p);
    if (o == SimplexOrientation::TRI) return h_distance_tri(lat, p);
    // d_bar(p, q) = d_tri(-p, -q) and the lattice is centrally symmetric.
    RVec neg(p.size());
    for (size_t i = 0; i < p.size(); ++i) neg[i] = -p[i];
    LatticeDistance res = h_distance_tri(lat, neg);
    for (auto& q : res.argmins)
        for (Int& v : q) v = -v;
    std::sort(res.argmins.begin(), res.argmins.end());
    return res;
}

namespace {

std::vector<IVec> points_within_tri(const LaplacianLattice& lat, const RVec& p,
                                    const Rat& r) {
    const int n1 = lat.vertex_count();
    const int n = lat.n();
    BigInt big_d = rat_den(r);
    for (const Rat& x : p) big_d = boost::multiprecision::lcm(big_d, rat_den(x));
    const Int d = to_int_checked(big_d);
    const Int rr = to_int_checked(rat_num(r * d));
    IVec sp(n1);
    for (int i = 0; i < n1; ++i) sp[i] = to_int_checked(rat_num(p[i] * d));

    BoxSearch search;
    search.hnf = &lat.hnf();
    search.n1 = n1;
    search.scaled_p = sp;
    search.denom = d;
    search.lo.resize(n1);
    search.hi.resize(n1);
    for (int i = 0; i < n1; ++i) {
        Int a = sp[i] - rr;
        search.lo[i] = a >= 0 ? (a + d - 1) / d : -((-a) / d);
        Int b = sp[i] + n * rr;
        search.hi[i] = b >= 0 ? b / d : -((-b + d - 1) / d);
    }
    search.suffix_lo.assign(n1 + 1, 0);
    search.suffix_hi.assign(n1 + 1, 0);
    for (int i = n1 - 1; i >= 0; --i) {
        search.suffix_lo[i] = search.suffix_lo[i + 1] + search.lo[i];
        search.suffix_hi[i] = search.suffix_hi[i + 1] + search.hi[i];
    }
    search.best = rr;
    search.collect_all = true;
    search.run();
    std::sort(search.argmins.begin(), search.argmins.end());
    return std::move(search.argmins);
}

}  // namespace

std::vector<IVec> lattice_points_within(const LaplacianLattice& lat, const RVec& p,
                                        const Rat& r, SimplexOrientation o) {
    require_h0(p);
    if (r < 0) throw std::invalid_argument("radius must be nonnegative");
    if (o == SimplexOrientation::TRI) return points_within_tri(lat, p, r);
    RVec neg(p.size());
    for (size_t i = 0; i < p.size(); ++i) neg[i] = -p[i];
    std::vector<IVec> pts = points_within_tri(lat, neg, r);
    for (auto& q : pts)
        for (Int& v : q) v = -v;
    std::sort(pts.begin(), pts.end());
    return pts;
}

}  // namespace laplat
