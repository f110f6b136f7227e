/**
 * JSON encodings shared by the CLI: multigraphs, exact lattice points,
 * configurations, and fixed-precision real formatting.
 */

#ifndef LAPLAT_JSON_IO_HPP
#define LAPLAT_JSON_IO_HPP

#include <json.hpp>

#include "laplat/multigraph.hpp"

namespace laplat {

using Json = nlohmann::json;

/// Parses {"vertices": n, "edges": [[i, j, mult], ...]} with 0-based
/// indices, i < j, positive multiplicities, and no duplicate pairs.
Multigraph graph_from_json(const Json& j);

Json graph_to_json(const Multigraph& g);

/// A point as a JSON array of exact coordinate strings "num/den".
Json point_to_json(const IVec& p);
Json point_to_json(const RVec& p);

/// Accepts coordinates as integers or "num/den" strings; requires integer
/// values for an IVec.
IVec ivec_from_json(const Json& j);
RVec rvec_from_json(const Json& j);

/// A list of integer points (e.g. a polytope vertex set).
std::vector<IVec> points_from_json(const Json& j);

/// 12 significant digits, locale-independent.
std::string format_real(double x);

}  // namespace laplat

#endif  // LAPLAT_JSON_IO_HPP
