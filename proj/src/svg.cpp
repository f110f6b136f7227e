#include "laplat/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "laplat/delaunay.hpp"
#include "laplat/json_io.hpp"

namespace laplat {

namespace {

// Isometric embedding of H_0 in R^3 into the drawing plane.
std::pair<double, double> embed(const RVec& p) {
    const double x0 = p[0].convert_to<double>();
    const double x1 = p[1].convert_to<double>();
    const double x2 = p[2].convert_to<double>();
    return {(x0 - x1) / std::sqrt(2.0), (x0 + x1 - 2.0 * x2) / std::sqrt(6.0)};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v + 0.0);  // normalize -0
    return buf;
}

}  // namespace

std::string render_svg(const Multigraph& g, int voronoi_resolution) {
    if (g.vertex_count() != 3)
        throw std::invalid_argument("svg rendering needs exactly 3 vertices");
    if (!g.is_connected()) throw std::invalid_argument("graph is disconnected");
    if (voronoi_resolution < 1 || voronoi_resolution > 64)
        throw std::runtime_error("grid resolution out of range");
    LaplacianLattice lat(g);

    // Lattice points over a small coefficient window.
    const int range = 2;
    std::vector<IVec> points;
    for (int a0 = -range; a0 <= range; ++a0)
        for (int a1 = -range; a1 <= range; ++a1)
            points.push_back(lat.combine({a0, a1}));

    // Delaunay cells, one triangle per distinct translated cell.
    std::vector<std::vector<IVec>> classes = triangle_classes(lat);
    std::set<std::vector<IVec>> cells;
    for (int a0 = -1; a0 <= 1; ++a0) {
        for (int a1 = -1; a1 <= 1; ++a1) {
            IVec t = lat.combine({a0, a1});
            for (const auto& cls : classes) {
                std::vector<IVec> cell;
                for (const IVec& v : cls) {
                    IVec w(3);
                    for (int j = 0; j < 3; ++j) w[j] = v[j] + t[j];
                    cell.push_back(w);
                }
                std::sort(cell.begin(), cell.end());
                cells.insert(cell);
            }
        }
    }

    // Voronoi cell boundary samples: grid points tied between >= 2 sites.
    std::vector<RVec> ties;
    for (int a0 = -voronoi_resolution; a0 <= voronoi_resolution; ++a0) {
        for (int a1 = -voronoi_resolution; a1 <= voronoi_resolution; ++a1) {
            RVec p(3, Rat(0));
            for (int j = 0; j < 3; ++j)
                p[j] = Rat(a0, voronoi_resolution) * lat.rows()[0][j] +
                       Rat(a1, voronoi_resolution) * lat.rows()[1][j];
            LatticeDistance d = h_distance(lat, p, SimplexOrientation::TRI);
            if (d.argmins.size() >= 2) ties.push_back(p);
        }
    }

    // Fixed viewport; scale from the polytope radius so the central cells fill it.
    double radius = 1.0;
    for (const auto& v : polytope(lat).vertices) {
        auto [x, y] = embed(to_rvec(v.point));
        radius = std::max({radius, std::abs(x), std::abs(y)});
    }
    const double cx = 400.0, cy = 400.0, scale = 180.0 / radius;
    auto map = [&](const RVec& p) {
        auto [x, y] = embed(p);
        return std::pair<double, double>{cx + scale * x, cy - scale * y};
    };

    Json meta;
    meta["triangle_classes"] = Json::array();
    for (const auto& cls : classes) {
        Json c = Json::array();
        for (const IVec& v : cls) c.push_back(point_to_json(v));
        meta["triangle_classes"].push_back(c);
    }
    meta["voronoi_resolution"] = voronoi_resolution;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    out += "<desc>" + meta.dump() + "</desc>\n";
    out += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

    for (const auto& cell : cells) {
        out += "<polygon points=\"";
        for (size_t i = 0; i < cell.size(); ++i) {
            auto [x, y] = map(to_rvec(cell[i]));
            if (i) out += " ";
            out += fmt(x) + "," + fmt(y);
        }
        out += "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    }
    for (const RVec& p : ties) {
        auto [x, y] = map(p);
        out += "<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) +
               "\" r=\"1.2\" fill=\"#3366cc\"/>\n";
    }
    for (const IVec& p : points) {
        auto [x, y] = map(to_rvec(p));
        out += "<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) +
               "\" r=\"3\" fill=\"black\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace laplat
