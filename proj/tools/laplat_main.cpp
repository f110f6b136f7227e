/**
 * laplat: command-line frontend for the Laplacian lattice library.
 *
 * Reads graphs, vertex sets and chip configurations as JSON (file path or
 * "-" for stdin), writes JSON or SVG to stdout. Exit codes: 0 success,
 * 1 domain error (error JSON on stderr), 2 usage error.
 */

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "laplat/chipfire.hpp"
#include "laplat/delaunay.hpp"
#include "laplat/invariants.hpp"
#include "laplat/json_io.hpp"
#include "laplat/oracles.hpp"
#include "laplat/reconstruct.hpp"
#include "laplat/spectrum.hpp"
#include "laplat/svg.hpp"

namespace {

using namespace laplat;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON input");
    return j;
}

Multigraph load_graph(const std::string& path) {
    return graph_from_json(parse_json(read_input(path)));
}

Json cut_to_json(const Cut& c) {
    return {{"side", c.side}, {"l1", c.l1_weight}, {"linf", c.linf_weight}};
}

Json bigint_to_json(const BigInt& v) {
    if (v <= BigInt(INT64_MAX) && v >= BigInt(INT64_MIN))
        return static_cast<Int>(v);
    return v.str();  // beyond 64-bit, keep exact as a string
}

void emit(const Json& j, bool pretty) {
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact geometry of Laplacian lattices under the simplicial distance"};
    app.require_subcommand(1);
    bool pretty = false;
    bool guard_override = false;
    app.add_flag("--guard-override", guard_override,
                 "allow guard flags above their documented defaults");
    std::string format = "json";
    app.add_option("--format", format, "json or pretty")
        ->check(CLI::IsMember({"json", "pretty"}));

    std::string graph_path, other_path;
    std::string c1_text, c2_text;
    int sv_guard = 24, poly_guard = 12, tri_guard = 8, census_vertices = 3;
    Int census_mult = 3;
    int resolution = 24, eps_steps = 6, iso_guard = 10, crit_guard = 8;

    auto* inv = app.add_subcommand("invariants", "lattice invariants of a graph");
    inv->add_option("graph", graph_path, "graph JSON (or -)")->required();
    inv->add_option("--shortest-guard", sv_guard, "vertex guard for enumeration");

    auto* del = app.add_subcommand("delaunay", "Delaunay polytope of the origin");
    del->add_option("graph", graph_path, "graph JSON (or -)")->required();
    del->add_option("--polytope-guard", poly_guard, "vertex guard for 2^n enumeration");

    auto* rec = app.add_subcommand("reconstruct", "graph from a polytope vertex set");
    rec->add_option("vertices", graph_path, "vertex-set JSON (or -)")->required();

    auto* iso = app.add_subcommand("isomorphic", "graph isomorphism");
    iso->add_option("first", graph_path, "graph JSON")->required();
    iso->add_option("second", other_path, "graph JSON")->required();
    iso->add_option("--iso-guard", iso_guard, "vertex guard for backtracking");

    auto* cen = app.add_subcommand("census", "small multigraphs grouped by lattice");
    cen->add_option("--vertices", census_vertices, "labelled vertex count (<= 4)");
    cen->add_option("--max-mult", census_mult, "multiplicity bound (<= 3)");

    auto* eqv = app.add_subcommand("equiv", "chip-firing equivalence");
    eqv->add_option("graph", graph_path, "graph JSON (or -)")->required();
    eqv->add_option("c1", c1_text, "configuration JSON array")->required();
    eqv->add_option("c2", c2_text, "configuration JSON array")->required();

    auto* eff = app.add_subcommand("effective", "effective-equivalence test");
    eff->add_option("graph", graph_path, "graph JSON (or -)")->required();
    eff->add_option("config", c1_text, "configuration JSON array")->required();

    auto* orc = app.add_subcommand("oracle", "brute-force verifiers");
    orc->require_subcommand(1);
    auto* orv = orc->add_subcommand("voronoi", "grid Voronoi neighbours of the origin");
    orv->add_option("graph", graph_path, "graph JSON (or -)")->required();
    orv->add_option("--resolution", resolution, "grid resolution (<= 64)");
    auto* orcrit = orc->add_subcommand("critical", "acyclic-orientation points");
    orcrit->add_option("graph", graph_path, "graph JSON (or -)")->required();
    orcrit->add_option("--critical-guard", crit_guard, "vertex guard for permutations");
    auto* orl = orc->add_subcommand("limit", "perturbation limit report");
    orl->add_option("graph", graph_path, "graph JSON (or -)")->required();
    orl->add_option("--steps", eps_steps, "use eps = 1/2, ..., 2^-steps");

    auto* svg = app.add_subcommand("svg", "Figure-style scene for 3-vertex graphs");
    svg->add_option("graph", graph_path, "graph JSON (or -)")->required();
    svg->add_option("--resolution", resolution, "Voronoi grid resolution (<= 64)");

    auto* spec = app.add_subcommand("spectrum", "Laplacian and adjacency eigenvalues");
    spec->add_option("graph", graph_path, "graph JSON (or -)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    pretty = format == "pretty";

    try {
        if (!guard_override) {
            if (sv_guard > 24 || poly_guard > 12 || iso_guard > 10 || crit_guard > 8 ||
                tri_guard > 8 || resolution > 64 || census_vertices > 4 ||
                census_mult > 3 || eps_steps > 12) {
                std::cerr << "a guard exceeds its default; pass --guard-override\n";
                return 2;
            }
        }

        if (*inv) {
            Multigraph g = load_graph(graph_path);
            InvariantReport r = invariant_report(g, sv_guard);
            Json out = {
                {"nu", rat_to_string(r.nu)},
                {"shortest_witness", point_to_json(r.shortest_witness)},
                {"pac", rat_to_string(r.pac)},
                {"pac_witness", cut_to_json(r.pac_witness)},
                {"cov", rat_to_string(r.cov)},
                {"trees", bigint_to_json(r.trees)},
                {"gamma", format_real(r.gamma)},
                {"theta", format_real(r.theta)},
                {"ramanujan",
                 {{"regular", r.ramanujan.regular},
                  {"degree", r.ramanujan.degree},
                  {"lambda", format_real(r.ramanujan.lambda_adjacency)},
                  {"bound", format_real(r.ramanujan.bound)},
                  {"is_ramanujan", r.ramanujan.ramanujan}}},
            };
            emit(out, pretty);
        } else if (*del) {
            Multigraph g = load_graph(graph_path);
            LaplacianLattice lat(g);
            DelaunayPolytope poly = polytope(lat, poly_guard);
            Json verts = Json::array(), facets = Json::array(), edges = Json::array();
            for (const auto& v : poly.vertices)
                verts.push_back({{"side", v.side}, {"point", point_to_json(v.point)}});
            for (const auto& f : poly.facets)
                facets.push_back({{"i", f.i}, {"j", f.j}, {"vertices", f.vertices}});
            for (const auto& [a, b] : poly.edges) edges.push_back({a, b});
            emit({{"n", poly.n},
                  {"vertices", verts},
                  {"facets", facets},
                  {"edges", edges}},
                 pretty);
        } else if (*rec) {
            auto pts = points_from_json(parse_json(read_input(graph_path)));
            emit(graph_to_json(reconstruct_graph(pts)), pretty);
        } else if (*iso) {
            Multigraph a = load_graph(graph_path);
            Multigraph b = load_graph(other_path);
            auto perm = graphs_isomorphic(a, b, iso_guard);
            Json out = {{"isomorphic", perm.has_value()},
                        {"perm", perm ? Json(*perm) : Json(nullptr)}};
            emit(out, pretty);
        } else if (*cen) {
            Json table = Json::array();
            for (const auto& cls : lattice_census(census_vertices, census_mult)) {
                Json hnf = Json::array();
                for (const auto& row : cls.hnf) hnf.push_back(row);
                Json graphs = Json::array();
                for (const auto& g : cls.graphs) graphs.push_back(graph_to_json(g));
                table.push_back({{"hnf", hnf}, {"graphs", graphs}});
            }
            emit({{"classes", table}}, pretty);
        } else if (*eqv) {
            Multigraph g = load_graph(graph_path);
            IVec c1 = ivec_from_json(parse_json(c1_text));
            IVec c2 = ivec_from_json(parse_json(c2_text));
            auto w = equivalent(g, c1, c2);
            emit({{"equivalent", w.has_value()},
                  {"witness", w ? point_to_json(*w) : Json(nullptr)}},
                 pretty);
        } else if (*eff) {
            Multigraph g = load_graph(graph_path);
            IVec c = ivec_from_json(parse_json(c1_text));
            EffectiveCertificate cert = effective_equivalent(g, c);
            Json out = {{"effective", cert.effective},
                        {"h", rat_to_string(cert.h)},
                        {"threshold", rat_to_string(cert.threshold)}};
            out["witness"] = cert.effective ? point_to_json(cert.witness) : Json(nullptr);
            out["representative"] =
                cert.effective ? point_to_json(cert.representative) : Json(nullptr);
            emit(out, pretty);
        } else if (*orv) {
            Multigraph g = load_graph(graph_path);
            Json pts = Json::array();
            for (const IVec& q : voronoi_neighbors_grid(LaplacianLattice(g), resolution))
                pts.push_back(point_to_json(q));
            emit({{"neighbors", pts}}, pretty);
        } else if (*orcrit) {
            Multigraph g = load_graph(graph_path);
            Json pts = Json::array();
            for (const auto& pt : critical_points(g, crit_guard))
                pts.push_back({{"pi", pt.pi},
                               {"nu", pt.nu},
                               {"c", point_to_json(pt.c)},
                               {"h", rat_to_string(pt.h)}});
            emit({{"points", pts}, {"cov", rat_to_string(covering_radius(g))}}, pretty);
        } else if (*orl) {
            Multigraph g = load_graph(graph_path);
            std::vector<Rat> eps;
            for (int k = 1; k <= eps_steps; ++k) eps.push_back(Rat(1, Int(1) << k));
            LimitReport rep = limit_check(g, eps);
            Json steps = Json::array();
            for (const auto& s : rep.steps)
                steps.push_back({{"eps", rat_to_string(s.eps)},
                                 {"nu_gap", rat_to_string(s.nu_gap)},
                                 {"pac_gap", rat_to_string(s.pac_gap)}});
            emit({{"steps", steps},
                  {"gaps_nonincreasing", rep.gaps_nonincreasing},
                  {"final_within_bound", rep.final_within_bound}},
                 pretty);
        } else if (*svg) {
            Multigraph g = load_graph(graph_path);
            std::cout << render_svg(g, resolution);
        } else if (*spec) {
            Multigraph g = load_graph(graph_path);
            Json lap = Json::array(), adj = Json::array();
            for (double v : laplacian_spectrum(g)) lap.push_back(format_real(v));
            for (double v : adjacency_spectrum(g)) adj.push_back(format_real(v));
            emit({{"laplacian", lap}, {"adjacency", adj}}, pretty);
        }
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
