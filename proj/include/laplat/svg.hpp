/**
 * Deterministic SVG rendering of a rank-2 Laplacian lattice: lattice
 * points, the Delaunay triangles, and a grid-approximated Voronoi cell
 * boundary, with the exact triangle classes embedded as metadata.
 */

#ifndef LAPLAT_SVG_HPP
#define LAPLAT_SVG_HPP

#include <string>

#include "laplat/multigraph.hpp"

namespace laplat {

/// Renders the scene for a connected multigraph on exactly 3 vertices.
/// Output is byte-deterministic for a given input.
std::string render_svg(const Multigraph& g, int voronoi_resolution = 24);

}  // namespace laplat

#endif  // LAPLAT_SVG_HPP
