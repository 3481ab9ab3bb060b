#include "lcy/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace lcy {

namespace {

Json rationals(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (auto& x : v) out.push_back(to_string(x));
    return out;
}

std::string fixed(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    std::string s = buf;
    return s == "-0.000" ? "0.000" : s;
}

}  // namespace

Json class_json(const HomologyClass& a) { return Json(a.coeffs); }

Json symplectic_json(const SymplecticClass& w) {
    Json j;
    j["space"] = w.space.name();
    if (w.space.is_quadric()) j["mu"] = to_string(w.mu);
    else j["delta"] = rationals(w.delta);
    return j;
}

Json config_json(const CyclicConfig& c, const SymplecticClass& w) {
    Json j;
    Json cls = Json::array(), labels = Json::array();
    for (auto& a : c.classes) {
        cls.push_back(class_json(a));
        labels.push_back(a.str());
    }
    j["classes"] = cls;
    j["labels"] = labels;
    j["self_intersections"] = self_intersection_seq(c);
    j["areas"] = rationals(area_seq(c, w));
    j["charge"] = charge(c);
    j["toric"] = is_toric(c);
    return j;
}

Json enumeration_json(const EnumerationResult& r) {
    Json j;
    j["w"] = symplectic_json(r.w);
    j["count"] = r.count();
    j["toric_count"] = r.toric_count();
    Json configs = Json::array();
    for (auto& c : r.all) configs.push_back(config_json(c, r.w));
    j["configs"] = configs;
    Json stats;
    stats["method"] = r.stats.method;
    Json by_len = Json::object();
    for (auto& [k, v] : r.stats.classes_by_length) by_len[std::to_string(k)] = v;
    stats["classes_by_length"] = by_len;
    Json gens = Json::array();
    for (auto& g : r.stats.generators) gens.push_back(g.str());
    stats["wall_generators"] = gens;
    stats["orbit_escapes"] = r.stats.orbit_escapes;
    j["stats"] = stats;
    return j;
}

Json boundary_json(const BoundaryData& b) {
    Json j;
    j["s"] = b.s;
    j["a"] = rationals(b.a);
    return j;
}

Json polygon_json(const DelzantPolygon& p) {
    Json verts = Json::array();
    for (auto& v : p.vertices) verts.push_back(Json::array({to_string(v[0]), to_string(v[1])}));
    Json j;
    j["vertices"] = verts;
    j["area"] = to_string(p.area());
    j["delzant"] = is_delzant(p);
    return j;
}

Json gs_json(const GSReport& g) {
    Json j;
    j["k"] = g.k;
    j["matrix"] = g.matrix;
    j["solvable"] = g.solvable;
    j["nullity"] = g.nullity;
    j["positive"] = g.positive;
    j["negative"] = g.negative;
    if (g.positive) j["positive_witness"] = rationals(g.positive_witness);
    if (g.negative) j["negative_witness"] = rationals(g.negative_witness);
    return j;
}

Json mutation_graph_json(const MutationGraph& g) {
    Json j;
    j["w"] = symplectic_json(g.w);
    Json nodes = Json::array();
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        Json n;
        n["index"] = i;
        n["config"] = config_json(g.nodes[i], g.w);
        n["boundary"] = boundary_json(g.boundary[i]);
        nodes.push_back(n);
    }
    j["nodes"] = nodes;
    Json edges = Json::array();
    for (auto& [a, b] : g.edges) edges.push_back(Json::array({a, b}));
    j["edges"] = edges;
    j["connected"] = is_connected(g);
    Json diag;
    diag["moves"] = g.moves.size();
    diag["self_loops"] = g.self_loops;
    diag["out_of_set"] = g.out_of_set;
    diag["ray_hits_vertex"] = g.vertex_hits;
    diag["not_delzant"] = g.non_delzant;
    diag["irreversible"] = g.irreversible;
    j["diagnostics"] = diag;
    return j;
}

Json realization_json(const RealizationReport& r) {
    Json j;
    j["w"] = symplectic_json(r.w);
    j["toric"] = r.toric;
    j["total"] = r.total;
    j["covered"] = r.covered.size();
    Json un = Json::array();
    for (auto& c : r.uncovered) un.push_back(config_json(c, r.w));
    j["uncovered"] = un;
    j["closure_escapes"] = r.closure_escapes;
    return j;
}

Json taut_json(const std::vector<int64_t>& seq, const TautResult& t) {
    Json j;
    j["sequence"] = seq;
    j["verdict"] = t.verdict == TautResult::Verdict::Taut      ? "taut"
                   : t.verdict == TautResult::Verdict::NotTaut ? "not_taut"
                                                               : "undecided";
    j["family"] = t.family;
    Json pre = Json::array();
    for (auto& x : t.preimages) {
        Json e;
        e["n"] = x.n;
        e["a"] = x.a;
        pre.push_back(e);
    }
    j["preimages"] = pre;
    j["summary"] = t.str();
    return j;
}

std::string enumeration_tsv(const EnumerationResult& r) {
    std::ostringstream os;
    os << "index\tlength\ttoric\tclasses\n";
    for (size_t i = 0; i < r.all.size(); ++i)
        os << i << '\t' << r.all[i].length() << '\t' << (is_toric(r.all[i]) ? 1 : 0) << '\t' << r.all[i].str() << '\n';
    return os.str();
}

std::string catalog_tsv(const std::vector<HomologyClass>& cat, const SymplecticClass& w) {
    std::ostringstream os;
    os << "coeffs\tsquare\tgenus\tarea\n";
    for (auto& a : cat) {
        for (size_t i = 0; i < a.coeffs.size(); ++i) os << (i ? "," : "") << a.coeffs[i];
        os << '\t' << square(a) << '\t' << genus(a) << '\t' << to_string(area(w, a)) << '\n';
    }
    return os.str();
}

std::string mutation_graph_dot(const MutationGraph& g) {
    std::ostringstream os;
    os << "graph mutations {\n  label=\"" << g.w.str() << "\";\n  node [shape=box, fontname=\"monospace\"];\n";
    for (size_t i = 0; i < g.nodes.size(); ++i) os << "  n" << i << " [label=\"" << i << ": " << g.nodes[i].str() << "\"];\n";
    for (auto& [a, b] : g.edges) os << "  n" << a << " -- n" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string polygon_svg(const DelzantPolygon& p) {
    // drawing only: exact coordinates are converted once for layout
    std::vector<std::pair<double, double>> pts;
    for (auto& v : p.vertices) pts.push_back({v[0].convert_to<double>(), -v[1].convert_to<double>()});
    double xmin = pts[0].first, xmax = xmin, ymin = pts[0].second, ymax = ymin;
    for (auto& [x, y] : pts) {
        xmin = std::min(xmin, x), xmax = std::max(xmax, x);
        ymin = std::min(ymin, y), ymax = std::max(ymax, y);
    }
    const double gx0 = std::floor(xmin), gx1 = std::ceil(xmax), gy0 = std::floor(ymin), gy1 = std::ceil(ymax);
    const double pad = 0.6;
    const double scale = 100.0;
    auto X = [&](double x) { return fixed((x - gx0 + pad) * scale); };
    auto Y = [&](double y) { return fixed((y - gy0 + pad) * scale); };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fixed((gx1 - gx0 + 2 * pad) * scale) << ' '
       << fixed((gy1 - gy0 + 2 * pad) * scale) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (double x = gx0; x <= gx1; x += 1)
        os << "<line x1=\"" << X(x) << "\" y1=\"" << Y(gy0) << "\" x2=\"" << X(x) << "\" y2=\"" << Y(gy1) << "\"/>\n";
    for (double y = gy0; y <= gy1; y += 1)
        os << "<line x1=\"" << X(gx0) << "\" y1=\"" << Y(y) << "\" x2=\"" << X(gx1) << "\" y2=\"" << Y(y) << "\"/>\n";
    os << "</g>\n<g fill=\"#888888\">\n";
    for (double x = gx0; x <= gx1; x += 1)
        for (double y = gy0; y <= gy1; y += 1) os << "<circle cx=\"" << X(x) << "\" cy=\"" << Y(y) << "\" r=\"3\"/>\n";
    os << "</g>\n<polygon fill=\"#cfe3f7\" fill-opacity=\"0.7\" stroke=\"#1f4e79\" stroke-width=\"3\" points=\"";
    for (size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << X(pts[i].first) << ',' << Y(pts[i].second);
    os << "\"/>\n<g font-family=\"monospace\" font-size=\"14\" fill=\"#7a1f1f\" text-anchor=\"middle\">\n";
    auto b = boundary_data(p);
    for (size_t i = 0; i < pts.size(); ++i) {
        auto& a = pts[i];
        auto& c = pts[(i + 1) % pts.size()];
        os << "<text x=\"" << X((a.first + c.first) / 2) << "\" y=\"" << Y((a.second + c.second) / 2) << "\">"
           << b.s[i] << '/' << to_string(b.a[i]) << "</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

std::string fnv1a_hex(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace lcy
