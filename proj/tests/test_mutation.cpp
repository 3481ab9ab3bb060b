#include "helpers.hpp"

#include <set>

using namespace lcy;
using namespace lcy::test;

namespace {

std::set<std::string> mutation_images(const DelzantPolygon& p) {
    std::set<std::string> out;
    for (int v = 0; v < p.size(); ++v)
        for (auto& o : toric_mutations(p, v))
            if (o.status == MutationOutcome::Status::Accepted)
                out.insert(std::to_string(v) + ":" + canonical_boundary(boundary_data(o.result)).str());
    return out;
}

DelzantPolygon moved(const DelzantPolygon& p) {
    // [[2,1],[1,1]] has determinant 1, so the orientation is kept
    DelzantPolygon out;
    for (auto& v : p.vertices)
        out.vertices.push_back({2 * v[0] + v[1] + Rational(1, 3), v[0] + v[1] - Rational(2, 7)});
    return out;
}

}  // namespace

TEST_CASE("mutation graph examples") {
    auto quad = mutation_graph(SymplecticClass::quadric(2));
    CHECK(quad.nodes.size() == 2);
    CHECK(is_connected(quad));
    auto m2 = mutation_graph(M({"2/5", "1/5"}));
    CHECK(m2.nodes.size() == 2);
    CHECK(is_connected(m2));
    auto path = mutation_path(m2, 0, 1);
    REQUIRE(path.has_value());
    CHECK(path->size() == 1);
    auto m3 = mutation_graph(M({"6/15", "5/15", "4/15"}));
    CHECK(m3.nodes.size() == 4);
    CHECK(is_connected(m3));
    CHECK(m3.out_of_set == 0);
    CHECK_THROWS(mutation_path(m3, 0, 9));
}

TEST_CASE("mutations keep area and can be undone") {
    for (auto& w : {SymplecticClass::quadric(3), M({"2/3"}), M({"4/5", "1/10"}), M({"1/2", "1/5", "1/10"}),
                    M({"3/5", "1/5", "1/5"})}) {
        auto g = mutation_graph(w);
        CHECK(g.irreversible == 0);
        for (auto& mv : g.moves) {
            auto src = build_polygon(g.nodes[static_cast<size_t>(mv.from)], w);
            auto o = toric_mutations(src, mv.move.vertex)[static_cast<size_t>(mv.move.side)];
            REQUIRE(o.status == MutationOutcome::Status::Accepted);
            CHECK(o.result.area() == src.area());
            const auto want = canonical_boundary(boundary_data(src));
            bool back = false;
            for (int v = 0; v < o.result.size() && !back; ++v)
                for (auto& b : toric_mutations(o.result, v))
                    back |= b.status == MutationOutcome::Status::Accepted && canonical_boundary(boundary_data(b.result)) == want;
            CHECK(back);
        }
    }
}

TEST_CASE("mutations do not depend on where the polygon sits") {
    for (auto& w : {M({"1/2", "1/5", "1/10"}), M({"4/5", "1/10"}), SymplecticClass::quadric(q("5/2"))}) {
        for (auto& c : enumerate_lcy(w, true).toric) {
            auto p = build_polygon(c, w);
            auto p2 = moved(p);
            CHECK(is_delzant(p2));
            CHECK(boundary_data(p2) == boundary_data(p));
            CHECK(mutation_images(p2) == mutation_images(p));
        }
    }
}

TEST_CASE("rejections") {
    auto tri = build_polygon(std::vector<int64_t>{1, 1, 1}, std::vector<Rational>{1, 1, 1});
    for (int v = 0; v < 3; ++v) {
        auto o = toric_mutate(tri, v);
        CHECK(o.status != MutationOutcome::Status::Accepted);
    }
    DelzantPolygon wedge{{Point{0, 0}, Point{2, 0}, Point{1, 2}}};
    CHECK_THROWS_AS(toric_mutations(wedge, 0), DelzantError);
}

TEST_CASE("realization by smoothing") {
    for (auto& w : {SymplecticClass::cp2(), SymplecticClass::quadric(1), SymplecticClass::quadric(2), M({"1/3"}),
                    M({"1/2"}), M({"2/5", "1/5"}), M({"3/10", "3/10"})}) {
        auto r = realization_report(w);
        CHECK(r.uncovered.empty());
        CHECK(r.closure_escapes == 0);
    }
    auto w = M({"6/15", "5/15", "4/15"});
    auto special = cfg(3, {H(3) - E(3, 1) - E(3, 2), E(3, 2) - E(3, 3), E(3, 1) - E(3, 2), H(3) - E(3, 1), H(3)});
    CHECK(validate(special, w).ok);
    auto res = enumerate_lcy(w);
    const auto& rep = res.representative_of.at(canonical_key(canonicalize(special)));
    auto r = realization_report(w);
    CHECK(r.toric == 4);
    bool found = false;
    for (auto& c : r.uncovered) found |= canonical_key(c) == rep;
    CHECK(found);
}
