#include "laplat/json_io.hpp"

#include <cstdio>
#include <set>

namespace laplat {

Multigraph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument(
            "graph JSON must be an object with \"vertices\" and \"edges\"");
    if (!j["vertices"].is_number_integer())
        throw std::invalid_argument("\"vertices\" must be an integer");
    const int n1 = j["vertices"].get<int>();
    if (n1 < 1) throw std::invalid_argument("vertex count must be positive");
    if (!j["edges"].is_array()) throw std::invalid_argument("\"edges\" must be an array");

    Multigraph g(n1);
    std::set<std::pair<int, int>> seen;
    for (const Json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
            !e[1].is_number_integer() || !e[2].is_number_integer())
            throw std::invalid_argument("each edge must be [i, j, multiplicity]");
        const int a = e[0].get<int>(), b = e[1].get<int>();
        const Int m = e[2].get<Int>();
        if (a < 0 || b < 0 || a >= n1 || b >= n1)
            throw std::invalid_argument("edge endpoint out of range");
        if (a >= b) throw std::invalid_argument("edges must satisfy i < j");
        if (m <= 0) throw std::invalid_argument("edge multiplicity must be positive");
        if (!seen.insert({a, b}).second)
            throw std::invalid_argument("duplicate edge pair");
        g.set_multiplicity(a, b, m);
    }
    return g;
}

Json graph_to_json(const Multigraph& g) {
    Json edges = Json::array();
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if (g.multiplicity(i, j) > 0)
                edges.push_back({i, j, g.multiplicity(i, j)});
    return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

Json point_to_json(const IVec& p) {
    Json a = Json::array();
    for (Int v : p) a.push_back(rat_to_string(Rat(v)));
    return a;
}

Json point_to_json(const RVec& p) {
    Json a = Json::array();
    for (const Rat& v : p) a.push_back(rat_to_string(v));
    return a;
}

RVec rvec_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("point must be a JSON array");
    RVec p;
    for (const Json& c : j) {
        if (c.is_number_integer())
            p.push_back(Rat(c.get<Int>()));
        else if (c.is_string())
            p.push_back(rat_from_string(c.get<std::string>()));
        else
            throw std::invalid_argument(
                "coordinates must be integers or \"num/den\" strings");
    }
    return p;
}

IVec ivec_from_json(const Json& j) {
    RVec r = rvec_from_json(j);
    IVec p(r.size());
    for (size_t i = 0; i < r.size(); ++i) {
        if (!rat_is_integer(r[i]))
            throw std::invalid_argument("coordinate is not an integer");
        p[i] = to_int_checked(rat_num(r[i]));
    }
    return p;
}

std::vector<IVec> points_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("point set must be a JSON array");
    std::vector<IVec> pts;
    for (const Json& p : j) pts.push_back(ivec_from_json(p));
    return pts;
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace laplat
