/**
 * Symmetric eigenvalue computation by cyclic Jacobi rotations.
 *
 * This is the only floating-point path in the library. The iteration stops
 * when the off-diagonal Frobenius norm drops below stop_tol times the
 * Frobenius norm of the input.
 */

#ifndef LAPLAT_SPECTRUM_HPP
#define LAPLAT_SPECTRUM_HPP

#include "laplat/multigraph.hpp"

namespace laplat {

struct SpectrumOptions {
    double stop_tol = 1e-12;  // off-diagonal norm threshold, relative
    double zero_tol = 1e-9;   // magnitude treated as a zero eigenvalue
};

/// Sorted (ascending) eigenvalues of a symmetric matrix. Rejects
/// non-symmetric input.
std::vector<double> jacobi_eigenvalues(const std::vector<std::vector<double>>& a,
                                       const SpectrumOptions& opt = {});

/// Sorted eigenvalues of the Laplacian of g.
std::vector<double> laplacian_spectrum(const Multigraph& g,
                                       const SpectrumOptions& opt = {});

/// Sorted eigenvalues of the adjacency matrix of g.
std::vector<double> adjacency_spectrum(const Multigraph& g,
                                       const SpectrumOptions& opt = {});

}  // namespace laplat

#endif  // LAPLAT_SPECTRUM_HPP
