#include "helpers.hpp"

#include <numeric>
#include <random>

using namespace lcy;
using namespace lcy::test;

namespace {

std::vector<SymplecticClass> toric_points() {
    auto pts = minimal_model_samples();
    for (int l = 2; l <= 3; ++l)
        for (auto& w : random_reduced_samples(l, 5, 1700 + static_cast<uint32_t>(l))) pts.push_back(w);
    pts.push_back(M({"1/3", "1/3", "1/3"}));
    pts.push_back(M({"1/2", "1/5", "1/10", "1/20"}));
    return pts;
}

Rational expected_area(const SymplecticClass& w) {
    if (w.space.is_quadric()) return w.mu;
    Rational v = 1;
    for (auto& d : w.delta) v -= d * d;
    return v / 2;
}

}  // namespace

TEST_CASE("generating sets") {
    auto g = generating_set({1, 1, 1});
    CHECK(g.at(1) == LatticeVector{0, -1});
    CHECK(g.at(2) == LatticeVector{1, 0});
    CHECK(g.at(3) == LatticeVector{-1, 1});
    CHECK(g.closes());
    CHECK(g.unimodular());
    CHECK(g.winding_number() == 1);
    auto sq = generating_set({0, 3, 0, -3});
    CHECK(sq.closes());
    CHECK_THROWS(generating_set({4, 1}));
}

TEST_CASE("polygons from boundary data") {
    auto p = build_polygon(std::vector<int64_t>{1, 1, 1}, std::vector<Rational>{1, 1, 1});
    REQUIRE(p.size() == 3);
    CHECK(p.vertices[0] == Point{0, 0});
    CHECK(p.vertices[1] == Point{0, -1});
    CHECK(p.vertices[2] == Point{1, -1});
    CHECK(is_delzant(p));
    CHECK(boundary_data(p) == BoundaryData{{1, 1, 1}, {1, 1, 1}});
    CHECK_THROWS(build_polygon(std::vector<int64_t>{1, 1}, std::vector<Rational>{1, 1}));
    CHECK_THROWS_AS(build_polygon(std::vector<int64_t>{1, 1, 1}, std::vector<Rational>{1, 2, 1}), DelzantError);

    DelzantPolygon square{{Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}}};
    CHECK(is_delzant(square));
    CHECK(boundary_data(square) == BoundaryData{{0, 0, 0, 0}, {1, 1, 1, 1}});
    DelzantPolygon wedge{{Point{0, 0}, Point{2, 0}, Point{1, 2}}};
    CHECK_FALSE(is_delzant(wedge));

    auto w = M({"2/5", "1/5"});
    auto c = cfg(2, {H(2) - E(2, 2), H(2) - E(2, 1), E(2, 1), H(2) - E(2, 1) - E(2, 2), E(2, 2)});
    auto pent = build_polygon(c, w);
    CHECK(pent.size() == 5);
    CHECK(pent.area() == expected_area(w));
}

TEST_CASE("GS criterion") {
    auto g = gs_solve(cfg(0, {H(0), H(0), H(0)}), SymplecticClass::cp2());
    CHECK(g.solvable);
    CHECK(g.positive);
    CHECK(g.nullity == 2);
    CHECK(g.matrix == std::vector<std::vector<int64_t>>{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    Rational sum = 0;
    for (auto& z : g.positive_witness) {
        CHECK(z > 0);
        sum += z;
    }
    CHECK(sum == 1);
    auto e = gs_solve(std::vector<int64_t>{9}, std::vector<Rational>{3});
    CHECK(e.positive);
    CHECK(e.positive_witness == std::vector<Rational>{Rational(1, 3)});
    auto two = gs_solve(cfg(0, {2 * H(0), H(0)}), SymplecticClass::cp2());
    CHECK(two.matrix == std::vector<std::vector<int64_t>>{{4, 2}, {2, 1}});
}

TEST_CASE("monodromy anchors") {
    CHECK(monodromy({1, 1, 1}) == identity2());
    for (int64_t k = 1; k <= 8; ++k) {
        auto m = monodromy(std::vector<int64_t>(static_cast<size_t>(k), -2));
        CHECK(m[0] + m[3] == 2);
        CHECK(m[0] * m[3] - m[1] * m[2] == 1);
        int64_t content = std::gcd(std::gcd(m[0] - 1, m[1]), std::gcd(m[2], m[3] - 1));
        CHECK(content == k);
    }
}

TEST_CASE("continued fractions") {
    CHECK(cf_eval(std::vector<int64_t>{2, 2}) == CfValue{false, Rational(3, 2)});
    CHECK(cf_eval(std::vector<int64_t>{1, 1}) == CfValue{false, 0});
    CHECK(cf_eval(std::vector<int64_t>{0}).value == 0);
    CHECK(cf_eval(std::vector<int64_t>{1, 0}).infinite);
    std::mt19937 rng(5);
    for (int t = 0; t < 200; ++t) {
        int64_t x = static_cast<int64_t>(rng() % 11) - 5, y = static_cast<int64_t>(rng() % 11) - 5;
        CHECK(cf_eval(std::vector<int64_t>{x - 1, -1, y - 1}) == cf_eval(std::vector<int64_t>{x, y}));
    }
    CHECK(cf_admissible({2, 1, 3, 2, 1}));
    CHECK_FALSE(cf_admissible({2, 0, 3}));
}

TEST_CASE("tautness") {
    const std::vector<int64_t> seq{1, -2, -3, -3, -2, -3, -2};
    PhiInput x{{2, 1, 3, 2, 1, 3}, {1, 2, 0, 0, 2, 0}}, y{{3, 1, 3, 1, 3, 1}, {0, 2, 0, 1, 0, 2}};
    CHECK(phi_domain(x));
    CHECK(phi_domain(y));
    CHECK(phi_map(x) == seq);
    CHECK(phi_map(y) == seq);
    auto t = def_taut(seq);
    CHECK(t.verdict == TautResult::Verdict::NotTaut);
    CHECK(t.preimages.size() >= 2);
    CHECK(std::find(t.preimages.begin(), t.preimages.end(), x) != t.preimages.end());
    CHECK(std::find(t.preimages.begin(), t.preimages.end(), y) != t.preimages.end());
    for (auto& p : t.preimages) CHECK(phi_map(p) == seq);

    for (int64_t p = -6; p <= 3; ++p) CHECK(def_taut({1, p}).verdict == TautResult::Verdict::Taut);
    for (int64_t p = 1; p <= 3; ++p) CHECK(def_taut({-1, -p}).verdict == TautResult::Verdict::Taut);
    for (int64_t p = -6; p <= 4; ++p) CHECK(def_taut({0, p}).verdict == TautResult::Verdict::Taut);
    for (int64_t p = -6; p <= 1; ++p) {
        CHECK(def_taut({1, 1, p}).verdict == TautResult::Verdict::Taut);
        CHECK(def_taut({p, 1, 1}).verdict == TautResult::Verdict::Taut);
    }
    CHECK(def_taut({5, 5, 5, 5}).verdict == TautResult::Verdict::Undecided);
}

TEST_CASE("toric configurations give Delzant polygons") {
    for (auto& w : toric_points()) {
        auto r = enumerate_lcy(w);
        for (auto& c : r.all) {
            auto s = self_intersection_seq(c);
            if (!is_toric(c)) {
                if (c.length() >= 3) CHECK(monodromy(s) != identity2());
                continue;
            }
            auto g = generating_set(s);
            CHECK(g.closes());
            CHECK(g.unimodular());
            CHECK(g.winding_number() == 1);
            auto a = area_seq(c, w);
            Rational sx = 0, sy = 0;
            for (int i = 0; i < c.length(); ++i) {
                sx += a[static_cast<size_t>(i)] * g.at(i + 1).x;
                sy += a[static_cast<size_t>(i)] * g.at(i + 1).y;
            }
            CHECK(sx == 0);
            CHECK(sy == 0);
            auto p = build_polygon(c, w);
            CHECK(is_delzant(p));
            CHECK(same_up_to_dihedral(boundary_data(p), boundary_data(c, w)));
            CHECK(p.area() == expected_area(w));
            CHECK(monodromy(s) == identity2());
            CHECK(gs_solve(c, w).positive);
        }
    }
}

TEST_CASE("corner chopping is a toric blow-up") {
    for (auto& w : random_reduced_samples(2, 4, 2100)) {
        for (auto& c : enumerate_lcy(w, true).toric) {
            auto p = build_polygon(c, w);
            auto a = area_seq(c, w);
            const int k = c.length();
            for (int i = 0; i < k; ++i) {
                Rational eps = std::min({a[static_cast<size_t>(i)], a[static_cast<size_t>((i + 1) % k)], w.delta.back()}) / 3;
                auto d = w.delta;
                d.push_back(eps);
                auto w2 = SymplecticClass::blowup(d);
                auto chopped = chop_corner(p, (i + 1) % k, eps);
                CHECK(is_delzant(chopped));
                CHECK(same_up_to_dihedral(boundary_data(chopped), boundary_data(toric_blow_up(c, i), w2)));
            }
        }
    }
}
