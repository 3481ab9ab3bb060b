#include "lcy/mutation.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace lcy {

namespace {

Point sub(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1]}; }
Rational cross(const Point& a, const Point& b) { return a[0] * b[1] - a[1] * b[0]; }
Rational dot(const Point& a, const Point& b) { return a[0] * b[0] + a[1] * b[1]; }
Point as_point(LatticeVector v) { return {Rational(v.x), Rational(v.y)}; }

// Drops repeated vertices and vertices where the boundary goes straight on.
std::vector<Point> drop_flat(std::vector<Point> pts) {
    bool changed = true;
    while (changed && pts.size() >= 3) {
        changed = false;
        const size_t n = pts.size();
        for (size_t i = 0; i < n; ++i) {
            const Point& prev = pts[(i + n - 1) % n];
            const Point& next = pts[(i + 1) % n];
            Point ein = sub(pts[i], prev), eout = sub(next, pts[i]);
            bool repeated = ein[0] == 0 && ein[1] == 0;
            bool straight = cross(ein, eout) == 0 && dot(ein, eout) > 0;
            if (repeated || straight) {
                pts.erase(pts.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    return pts;
}

}  // namespace

std::string MutationMove::str() const {
    return "vertex " + std::to_string(vertex) + " ray " + ray.str() + " exit edge " + std::to_string(exit_edge) +
           " side " + std::to_string(side);
}

const char* status_name(MutationOutcome::Status s) {
    switch (s) {
        case MutationOutcome::Status::Accepted: return "accepted";
        case MutationOutcome::Status::RayHitsVertex: return "ray hits a vertex";
        case MutationOutcome::Status::NotDelzant: return "result is not Delzant";
    }
    return "?";
}

std::vector<MutationOutcome> toric_mutations(const DelzantPolygon& p, int v) {
    if (!is_delzant(p)) throw DelzantError("toric mutation needs a Delzant polygon");
    const int n = p.size();
    v = ((v % n) + n) % n;
    const Point& q = p.at(v);
    LatticeVector u1 = primitive_direction(sub(p.at(v + 1), q));
    LatticeVector u2 = primitive_direction(sub(p.at(v - 1), q));
    LatticeVector w = u1 + u2;
    const Point wp = as_point(w);

    // exit point of the ray q + t w, t > 0
    std::optional<int> exit_edge;
    Point x;
    bool at_vertex = false;
    for (int e = 0; e < n; ++e) {
        if (e == v || e == ((v - 1 + n) % n)) continue;
        Point a = p.at(e), ab = sub(p.at(e + 1), p.at(e)), aq = sub(a, q);
        Rational den = cross(wp, ab);
        if (den == 0) continue;
        Rational t = cross(aq, ab) / den, s = cross(aq, wp) / den;
        if (t <= 0 || s < 0 || s > 1) continue;
        if (s == 0 || s == 1) at_vertex = true;
        exit_edge = e;
        x = {q[0] + t * wp[0], q[1] + t * wp[1]};
        if (!at_vertex) break;
    }
    MutationMove base{v, w, exit_edge.value_or(-1), 0};
    if (at_vertex || !exit_edge) {
        MutationOutcome o;
        o.status = MutationOutcome::Status::RayHitsVertex;
        o.move = base;
        return {o, o};
    }
    const int a = *exit_edge;
    // vertices strictly between v and the exit point on each side
    std::vector<Point> first, second;
    for (int i = v + 1; ((i - v) % n + n) % n != 0; ++i) {
        int idx = ((i % n) + n) % n;
        first.push_back(p.at(idx));
        if (idx == a) break;
    }
    for (int i = a + 1; ((i % n) + n) % n != v; ++i) second.push_back(p.at(i));

    std::vector<MutationOutcome> out;
    for (int side = 0; side < 2; ++side) {
        // the shear fixes the ray and flattens the corner at q
        const int64_t eps = side == 0 ? -det(u2, u1) : det(u2, u1);
        auto shear = [&](const Point& y) {
            Rational c = Rational(eps) * cross(wp, sub(y, q));
            return Point{y[0] + c * wp[0], y[1] + c * wp[1]};
        };
        std::vector<Point> pts{q};
        for (auto& y : first) pts.push_back(side == 0 ? shear(y) : y);
        pts.push_back(x);
        for (auto& y : second) pts.push_back(side == 1 ? shear(y) : y);
        MutationOutcome o;
        o.move = base;
        o.move.side = side;
        DelzantPolygon r{drop_flat(std::move(pts))};
        if (is_delzant(r)) {
            o.status = MutationOutcome::Status::Accepted;
            o.result = std::move(r);
        }
        out.push_back(std::move(o));
    }
    return out;
}

MutationOutcome toric_mutate(const DelzantPolygon& p, int v) {
    auto all = toric_mutations(p, v);
    for (auto& o : all)
        if (o.status == MutationOutcome::Status::Accepted) return o;
    return all.front();
}

MutationGraph mutation_graph(const SymplecticClass& w) {
    MutationGraph g;
    g.w = w;
    g.nodes = enumerate_lcy(w, true).toric;
    std::map<std::string, int> index;
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        auto b = canonical_boundary(boundary_data(g.nodes[i], w));
        auto [it, fresh] = index.emplace(b.str(), static_cast<int>(i));
        if (!fresh)
            throw std::logic_error("toric nodes " + g.nodes[static_cast<size_t>(it->second)].str() + " and " +
                                   g.nodes[i].str() + " share boundary data " + b.str());
        g.boundary.push_back(std::move(b));
    }
    std::set<std::pair<int, int>> directed, undirected;
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        auto poly = build_polygon(g.nodes[i], w);
        for (int v = 0; v < poly.size(); ++v) {
            for (auto& o : toric_mutations(poly, v)) {
                if (o.status == MutationOutcome::Status::RayHitsVertex) {
                    ++g.vertex_hits;
                    break;  // both sides share the ray
                }
                if (o.status == MutationOutcome::Status::NotDelzant) {
                    ++g.non_delzant;
                    continue;
                }
                auto it = index.find(canonical_boundary(boundary_data(o.result)).str());
                if (it == index.end()) {
                    ++g.out_of_set;
                    continue;
                }
                const int j = it->second, from = static_cast<int>(i);
                if (j == from) {
                    ++g.self_loops;
                    continue;
                }
                g.moves.push_back({from, j, o.move});
                directed.emplace(from, j);
                undirected.emplace(std::min(from, j), std::max(from, j));
            }
        }
    }
    for (auto& [a, b] : directed)
        if (!directed.count({b, a})) ++g.irreversible;
    g.edges.assign(undirected.begin(), undirected.end());
    return g;
}

namespace {

std::vector<int> bfs_parents(const MutationGraph& g, int start, std::vector<int>& via) {
    const size_t n = g.nodes.size();
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, move index)
    for (size_t m = 0; m < g.moves.size(); ++m) {
        adj[static_cast<size_t>(g.moves[m].from)].push_back({g.moves[m].to, static_cast<int>(m)});
        adj[static_cast<size_t>(g.moves[m].to)].push_back({g.moves[m].from, static_cast<int>(m)});
    }
    std::vector<int> parent(n, -2);
    via.assign(n, -1);
    std::queue<int> q;
    parent[static_cast<size_t>(start)] = -1;
    q.push(start);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (auto [y, m] : adj[static_cast<size_t>(x)]) {
            if (parent[static_cast<size_t>(y)] != -2) continue;
            parent[static_cast<size_t>(y)] = x;
            via[static_cast<size_t>(y)] = m;
            q.push(y);
        }
    }
    return parent;
}

}  // namespace

bool is_connected(const MutationGraph& g) {
    if (g.nodes.empty()) return false;
    std::vector<int> via;
    auto parent = bfs_parents(g, 0, via);
    return std::none_of(parent.begin(), parent.end(), [](int x) { return x == -2; });
}

std::optional<std::vector<MutationEdge>> mutation_path(const MutationGraph& g, int a, int b) {
    const int n = static_cast<int>(g.nodes.size());
    if (a < 0 || b < 0 || a >= n || b >= n) throw std::out_of_range("mutation_path: node index out of range");
    std::vector<int> via;
    auto parent = bfs_parents(g, a, via);
    if (parent[static_cast<size_t>(b)] == -2) return std::nullopt;
    std::vector<MutationEdge> path;
    for (int x = b; x != a; x = parent[static_cast<size_t>(x)]) {
        MutationEdge e = g.moves[static_cast<size_t>(via[static_cast<size_t>(x)])];
        if (e.to != x) std::swap(e.from, e.to);  // traversed against the recorded direction
        path.push_back(e);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

RealizationReport realization_report(const SymplecticClass& w) {
    auto res = enumerate_lcy(w);
    RealizationReport rep;
    rep.w = w;
    rep.toric = res.toric_count();
    rep.total = res.count();
    std::set<std::string> reached;
    for (auto& c : smoothing_closure(res.toric)) {
        auto it = res.representative_of.find(canonical_key(c));
        if (it == res.representative_of.end()) {
            ++rep.closure_escapes;
            continue;
        }
        reached.insert(it->second);
    }
    for (auto& c : res.all) (reached.count(canonical_key(c)) ? rep.covered : rep.uncovered).push_back(c);
    return rep;
}

}  // namespace lcy
