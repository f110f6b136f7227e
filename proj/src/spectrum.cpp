#include "laplat/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace laplat {

namespace {

double off_diagonal_norm(const std::vector<std::vector<double>>& a) {
    const int n = static_cast<int>(a.size());
    double s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += a[i][j] * a[i][j];
    return std::sqrt(s);
}

double frobenius_norm(const std::vector<std::vector<double>>& a) {
    double s = 0;
    for (const auto& row : a)
        for (double x : row) s += x * x;
    return std::sqrt(s);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(const std::vector<std::vector<double>>& input,
                                       const SpectrumOptions& opt) {
    const int n = static_cast<int>(input.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(input[i].size()) != n)
            throw std::invalid_argument("matrix is not square");
        for (int j = 0; j < n; ++j)
            if (input[i][j] != input[j][i])
                throw std::invalid_argument("matrix is not symmetric");
    }
    if (n == 1) return {input[0][0]};

    auto a = input;
    const double threshold = opt.stop_tol * std::max(frobenius_norm(a), 1e-300);
    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_norm(a) <= threshold) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    if (off_diagonal_norm(a) > threshold)
        throw std::runtime_error("jacobi iteration did not converge");

    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a[i][i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

std::vector<double> laplacian_spectrum(const Multigraph& g, const SpectrumOptions& opt) {
    const IMat q = laplacian(g);
    const int n1 = g.vertex_count();
    std::vector<std::vector<double>> a(n1, std::vector<double>(n1));
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) a[i][j] = static_cast<double>(q[i][j]);
    auto eig = jacobi_eigenvalues(a, opt);
    if (g.is_connected() && std::abs(eig.front()) > opt.zero_tol)
        throw std::runtime_error("connected graph has no zero laplacian eigenvalue");
    return eig;
}

std::vector<double> adjacency_spectrum(const Multigraph& g, const SpectrumOptions& opt) {
    const int n1 = g.vertex_count();
    std::vector<std::vector<double>> a(n1, std::vector<double>(n1, 0.0));
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            if (i != j) a[i][j] = static_cast<double>(g.multiplicity(i, j));
    return jacobi_eigenvalues(a, opt);
}

}  // namespace laplat
