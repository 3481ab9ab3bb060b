#include "lcy/catalog.hpp"

#include <algorithm>
#include <set>

namespace lcy {

namespace {

void require_blowup_reduced(const SymplecticClass& w) {
    if (w.space.is_quadric()) throw LatticeError("the H_l catalog lives on blow-ups of CP^2");
    if (!is_reduced(w)) throw LatticeError("symplectic class " + w.str() + " is not reduced");
}

Rational c1_area(const SymplecticClass& w) { return area(w, c1(w.space)); }

// Integer window of k with lo < area(kH-(k-1)E1 - tail) < hi. The area is
// affine in k with slope 1-d1 > 0.
std::pair<int64_t, int64_t> k_window(const SymplecticClass& w, const Rational& tail_area) {
    Rational slope = 1 - w.d(1);
    // area(k) = k*slope + d1 - tail_area
    Rational base = w.d(1) - tail_area;
    Rational upper = c1_area(w);
    int64_t kmin = to_int64(floor_of(Rational(-base / slope))) + 1;  // area > 0
    int64_t kmax = to_int64(ceil_of(Rational((upper - base) / slope))) - 1;  // area < upper
    return {kmin, kmax};
}

void add_if_positive(const SymplecticClass& w, const HomologyClass& a, std::set<HomologyClass>& out) {
    if (area(w, a) > 0) out.insert(a);
}

std::set<HomologyClass> build(const SymplecticClass& w, bool toric_only) {
    require_blowup_reduced(w);
    const auto s = w.space;
    const int l = s.l;
    std::set<HomologyClass> out;
    const auto H = HomologyClass::H(s);
    auto E = [&](int i) { return HomologyClass::E(s, i); };

    if (l == 0) {
        out.insert(H);
        if (!toric_only) {
            out.insert(2 * H);
            out.insert(3 * H);
        }
        return out;
    }

    // eps ranges over subsets of {lo..l}
    auto subsets = [&](int lo, auto&& body) {
        const int n = std::max(0, l - lo + 1);
        for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
            auto tail = HomologyClass::zero(s);
            for (int b = 0; b < n; ++b)
                if (mask >> b & 1) tail += E(lo + b);
            body(tail);
        }
    };

    // kH - (k-1)E1 - sum_{i>=2} eps_i E_i
    subsets(2, [&](const HomologyClass& tail) {
        auto [kmin, kmax] = k_window(w, area(w, tail));
        for (int64_t k = kmin; k <= kmax; ++k) {
            auto a = k * H - (k - 1) * E(1) - tail;
            if (area(w, a) > 0) out.insert(a);
        }
    });
    // H - E1 - sum eps_i E_i
    subsets(2, [&](const HomologyClass& tail) { add_if_positive(w, H - E(1) - tail, out); });
    // E_p - sum_{i>p} eps_i E_i
    for (int p = 2; p <= l; ++p)
        subsets(p + 1, [&](const HomologyClass& tail) { add_if_positive(w, E(p) - tail, out); });
    if (toric_only) return out;

    // 2H - sum_{i>=2} eps_i E_i
    subsets(2, [&](const HomologyClass& tail) { add_if_positive(w, 2 * H - tail, out); });
    // 3H - E1 - ... - El
    add_if_positive(w, c1(s), out);
    // 3H - E1 - ... - E_{p-1} - 2E_p - sum_{i>p} eps_i E_i
    for (int p = 2; p <= l; ++p) {
        auto head = 3 * H - 2 * E(p);
        for (int i = 1; i < p; ++i) head -= E(i);
        subsets(p + 1, [&](const HomologyClass& tail) { add_if_positive(w, head - tail, out); });
    }
    return out;
}

}  // namespace

std::vector<HomologyClass> catalog_members(const SymplecticClass& w) {
    auto s = build(w, false);
    return {s.begin(), s.end()};
}

std::vector<HomologyClass> toric_catalog_members(const SymplecticClass& w) {
    auto s = build(w, true);
    return {s.begin(), s.end()};
}

std::vector<HomologyClass> negative_sphere_classes(int l, int n, const SymplecticClass& w) {
    if (l != 2 && l != 3) throw LatticeError("negative sphere tables exist for l in {2,3} only");
    if (n < 1) throw LatticeError("n must be positive");
    if (w.space.is_quadric() || w.space.l != l) throw LatticeError("symplectic class does not live on M" + std::to_string(l));
    const auto s = w.space;
    const auto H = HomologyClass::H(s);
    auto E = [&](int i) { return HomologyClass::E(s, i); };
    std::vector<HomologyClass> table;
    if (l == 2) {
        if (n == 1) table = {E(1), E(2), H - E(1) - E(2)};
        else if (n % 2 == 1) {
            int64_t k = (n - 1) / 2;
            table = {-k * H + (k + 1) * E(1)};
        } else {
            int64_t k = n / 2;
            table = {-(k - 1) * H + k * E(1) - E(2)};
        }
    } else {
        if (n == 1) table = {E(1), E(2), E(3), H - E(1) - E(2), H - E(1) - E(3), H - E(2) - E(3)};
        else if (n == 2) table = {E(1) - E(2), E(1) - E(3), E(2) - E(3), H - E(1) - E(2) - E(3)};
        else if (n % 2 == 1) {
            int64_t k = (n - 1) / 2;
            table = {-k * H + (k + 1) * E(1), -(k - 1) * H + k * E(1) - E(2) - E(3)};
        } else {
            int64_t k = (n - 2) / 2;
            table = {-k * H + (k + 1) * E(1) - E(2), -k * H + (k + 1) * E(1) - E(3)};
        }
    }
    std::vector<HomologyClass> out;
    for (auto& a : table)
        if (area(w, a) > 0) out.push_back(a);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<HomologyClass> quadric_catalog(const SymplecticClass& w) {
    if (!w.space.is_quadric()) throw LatticeError("quadric_catalog needs a quadric class");
    if (!is_reduced(w)) throw LatticeError("mu must be >= 1");
    const auto F = HomologyClass::F(), B = HomologyClass::B();
    std::set<HomologyClass> out;
    auto positive = [&](const std::vector<HomologyClass>& fam) {
        for (auto& a : fam)
            if (area(w, a) <= 0) return false;
        return true;
    };
    auto add_family = [&](const std::vector<HomologyClass>& fam) {
        if (positive(fam)) out.insert(fam.begin(), fam.end());
    };
    add_family({2 * F + 2 * B});
    add_family({2 * B + F, F});
    // Every family member is B + bF with area mu + b, so |b| <= mu + 2 suffices.
    int64_t bound = to_int64(ceil_of(w.mu)) + 3;
    for (int64_t b = -bound; b <= bound; ++b) {
        add_family({B + b * F, B + (2 - b) * F});
        add_family({B + b * F, F, B + (1 - b) * F});
        add_family({B + (b - 1) * F, F, B + (1 - b) * F, F});
    }
    return {out.begin(), out.end()};
}

}  // namespace lcy
