#include "lcy/samples.hpp"

#include "lcy/formulas.hpp"

#include <random>
#include <set>

namespace lcy {

namespace {

using Vec = std::vector<Rational>;

Vec combine(const std::vector<Vec>& pts, const std::vector<int>& weights) {
    int total = 0;
    for (int x : weights) total += x;
    Vec out(pts[0].size(), Rational(0));
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t k = 0; k < out.size(); ++k) out[k] += Rational(weights[i], total) * pts[i][k];
    return out;
}

Vec centroid(const std::vector<Vec>& pts) { return combine(pts, std::vector<int>(pts.size(), 1)); }

// Raw mt19937 draw reduced to [lo, hi]; avoids distribution classes whose output is library specific.
int draw(std::mt19937& g, int lo, int hi) { return lo + static_cast<int>(g() % static_cast<uint32_t>(hi - lo + 1)); }

Vec m2_P(int i) { return {Rational(i, i + 1), Rational(1, i + 1)}; }
Vec m2_Q(int i) { return {Rational(i, i + 1), Rational(0)}; }
Vec m3(const Point3& p) { return {p[0], p[1], p[2]}; }

void add_triangle(std::vector<NamedSample>& out, const std::string& tag, int i, const Vec& a, const Vec& b,
                  const Vec& c, int n) {
    // interior points, then the interior of edge bc
    for (int x = 1; x < n; ++x)
        for (int y = 1; x + y < n; ++y) out.push_back({tag, i, SymplecticClass::blowup(combine({a, b, c}, {x, y, n - x - y}))});
    for (int y = 1; y < n; ++y) out.push_back({tag, i, SymplecticClass::blowup(combine({b, c}, {y, n - y}))});
}

}  // namespace

std::vector<SymplecticClass> minimal_model_samples() {
    return {SymplecticClass::cp2(),
            SymplecticClass::quadric(1),
            SymplecticClass::quadric(Rational(3, 2)),
            SymplecticClass::quadric(2),
            SymplecticClass::quadric(Rational(7, 3)),
            SymplecticClass::quadric(3),
            SymplecticClass::blowup({Rational(1, 3)}),
            SymplecticClass::blowup({Rational(1, 2)}),
            SymplecticClass::blowup({Rational(2, 3)}),
            SymplecticClass::blowup({Rational(4, 5)})};
}

std::vector<NamedSample> m2_region_samples(int resolution) {
    std::vector<NamedSample> out;
    for (int i = 0; i <= 4; ++i) {
        if (i >= 1) add_triangle(out, "PPQ", i, m2_P(i), m2_Q(i), m2_P(i + 1), resolution);
        add_triangle(out, "QQP", i, m2_Q(i), m2_Q(i + 1), m2_P(i + 1), resolution);
    }
    for (int k = 1; k <= 20; ++k) out.push_back({"OM", 0, SymplecticClass::blowup({Rational(k, 42), Rational(k, 42)})});
    return out;
}

std::vector<NamedSample> m3_family_samples() {
    std::vector<NamedSample> out;
    auto P = [](int j) { return m3(m3_P(j)); };
    auto Q = [](int j) { return m3(m3_Q(j)); };
    auto R = [](int j) { return m3(m3_R(j)); };
    auto add = [&](const std::string& fam, int i, const std::vector<Vec>& vs) {
        out.push_back({fam, i, SymplecticClass::blowup(centroid(vs))});
        std::vector<int> wts;
        for (size_t t = 0; t < vs.size(); ++t) wts.push_back(static_cast<int>(t) + 1);
        out.push_back({fam, i, SymplecticClass::blowup(combine(vs, wts))});
    };
    for (int i = 1; i <= 2; ++i) {
        add("1", i, {Q(i - 1), R(i - 1), P(2 * i - 1), P(2 * i - 2)});
        add("2", i, {Q(i - 1), Q(i), R(i - 1), P(2 * i - 1)});
        add("3", i, {Q(i), R(i - 1), P(2 * i - 1), P(2 * i)});
        add("4", i, {Q(i), R(i - 1), R(i), P(2 * i)});
        add("5", i, {Q(i - 1), P(2 * i - 2), P(2 * i - 1)});
        add("6", i, {Q(i - 1), Q(i), P(2 * i - 1)});
        add("7", i, {Q(i), P(2 * i - 1), P(2 * i)});
        add("8", i, {R(i - 1), P(2 * i - 2), P(2 * i - 1)});
        add("9", i, {R(i - 1), P(2 * i - 1), P(2 * i)});
        add("10", i, {R(i - 1), R(i), P(2 * i)});
        add("11", i, {P(i - 1), P(i)});
    }
    add("12", 0, {Q(0), R(0), P(0)});
    add("13", 0, {R(0), P(0)});
    add("14", 0, {Q(0), P(0)});
    out.push_back({"14", 0, SymplecticClass::blowup({Rational(1, 3), Rational(1, 3), Rational(1, 3)})});
    return out;
}

std::vector<SymplecticClass> m3_grid_samples(const std::vector<int>& denominators) {
    std::vector<SymplecticClass> out;
    std::set<std::string> seen;
    for (int n : denominators)
        for (int a = 1; a < n; ++a)
            for (int b = 1; b <= a; ++b)
                for (int c = 1; c <= b && a + b + c <= n; ++c) {
                    auto w = SymplecticClass::blowup({Rational(a, n), Rational(b, n), Rational(c, n)});
                    if (is_c1_nef(w) && seen.insert(w.str()).second) out.push_back(w);
                }
    return out;
}

std::vector<SymplecticClass> restrictive_samples(int l, int count, uint32_t seed) {
    std::mt19937 g(seed);
    std::vector<SymplecticClass> out;
    std::set<std::string> seen;
    while (static_cast<int>(out.size()) < count) {
        const int den = draw(g, 20, 99);
        Vec d(static_cast<size_t>(l));
        Rational tail = 0;
        for (int k = l; k >= 2; --k) {
            // d_k exceeds the sum of the later deltas
            d[static_cast<size_t>(k - 1)] = tail + Rational(draw(g, 1, 6), den);
            tail += d[static_cast<size_t>(k - 1)];
        }
        d[0] = (l >= 2 ? d[1] : Rational(0)) + Rational(draw(g, 1, 6), den);
        auto w = SymplecticClass::blowup(d);
        if (is_c1_nef(w) && is_restrictive(w) && seen.insert(w.str()).second) out.push_back(w);
    }
    return out;
}

std::vector<SymplecticClass> nonrestrictive_interior_samples(int l, int count, uint32_t seed) {
    std::mt19937 g(seed);
    std::vector<SymplecticClass> out;
    std::set<std::string> seen;
    for (int attempt = 0; static_cast<int>(out.size()) < count && attempt < 100000; ++attempt) {
        const int den = draw(g, 12, 60);
        Vec d(static_cast<size_t>(l));
        Rational cur = 0;
        for (int k = l; k >= 1; --k) {
            cur += Rational(draw(g, 1, 4), den);
            d[static_cast<size_t>(k - 1)] = cur;
        }
        auto w = SymplecticClass::blowup(d);
        if (is_c1_nef(w) && is_interior(w) && !is_restrictive(w) && seen.insert(w.str()).second) out.push_back(w);
    }
    return out;
}

std::vector<SymplecticClass> random_reduced_samples(int l, int count, uint32_t seed) {
    std::mt19937 g(seed);
    std::vector<SymplecticClass> out;
    std::set<std::string> seen;
    for (int attempt = 0; static_cast<int>(out.size()) < count && attempt < 100000; ++attempt) {
        const int den = draw(g, 6, 40);
        Vec d(static_cast<size_t>(l));
        int cur = 0;
        for (int k = l; k >= 1; --k) {
            cur += draw(g, 1, 3);
            d[static_cast<size_t>(k - 1)] = Rational(cur, den);
        }
        auto w = SymplecticClass::blowup(d);
        if (is_c1_nef(w) && seen.insert(w.str()).second) out.push_back(w);
    }
    return out;
}

std::vector<NamedSample> toric_region_samples(int l) {
    std::vector<NamedSample> out;
    if (l == 4) {
        for (int k = 3; k <= 8; ++k) {
            Rational t(1, k);
            out.push_back({"MO", 0, SymplecticClass::blowup({t, t, t, t})});
        }
        for (int k = 4; k <= 9; ++k) {
            Rational s(1, k);
            out.push_back({"MA", 0, SymplecticClass::blowup({1 - 2 * s, s, s, s})});
        }
        for (auto& w : restrictive_samples(4, 6, 41)) out.push_back({"interior", 0, w});
        for (auto& w : nonrestrictive_interior_samples(4, 6, 42)) out.push_back({"interior", 0, w});
        return out;
    }
    if (l == 5) {
        const Rational t(1, 3), h(1, 2), q(1, 4);
        const Vec M{t, t, t, t, t}, O{0, 0, 0, 0, 0}, A{1, 0, 0, 0, 0}, D{t, t, t, t, 0}, X{h, q, q, q, q};
        const std::vector<std::vector<int>> weights{{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}, {1, 0, 1}};
        for (auto& wt : weights) out.push_back({"MOD", 0, SymplecticClass::blowup(combine({M, O, D}, wt))});
        for (auto& wt : weights) out.push_back({"MAD", 0, SymplecticClass::blowup(combine({M, A, D}, wt))});
        for (auto& wt : weights) out.push_back({"MOX", 0, SymplecticClass::blowup(combine({M, O, X}, wt))});
        out.push_back({"MOX", 0, SymplecticClass::blowup(X)});
        for (auto& wt : std::vector<std::vector<int>>{{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}, {1, 3, 1}})
            out.push_back({"XOA", 0, SymplecticClass::blowup(combine({X, O, A}, wt))});
        for (auto& w : restrictive_samples(5, 3, 51)) out.push_back({"interior", 0, w});
        for (auto& w : nonrestrictive_interior_samples(5, 3, 52)) out.push_back({"interior", 0, w});
        return out;
    }
    throw LatticeError("toric region samples exist for l = 4 and l = 5");
}

}  // namespace lcy
