#include "lcy/formulas.hpp"

#include <stdexcept>

namespace lcy {

namespace {

int64_t ceil_int(const Rational& r) { return to_int64(ceil_of(r)); }

void require_space(const SymplecticClass& w, int l) {
    if (w.space.is_quadric() || w.space.l != l) throw LatticeError("expected a class on M" + std::to_string(l));
    if (!is_c1_nef(w)) throw LatticeError("symplectic class " + w.str() + " is not reduced c1-nef");
}

// -k + (k+1) d1, the area of -kH + (k+1)E1
Rational f1(const SymplecticClass& w, int64_t k) { return Rational(-k) + Rational(k + 1) * w.d(1); }
// area of -kH + (k+1)E1 - E2
Rational f2(const SymplecticClass& w, int64_t k) { return f1(w, k) - w.d(2); }
// area of -(k-1)H + kE1 - E2 - E3
Rational f3(const SymplecticClass& w, int64_t k) { return f1(w, k - 1) - w.d(2) - w.d(3); }
// area of -kH + (k+1)E1 - E3
Rational f4(const SymplecticClass& w, int64_t k) { return f1(w, k) - w.d(3); }

int64_t m2_ceilings(const SymplecticClass& w) {
    Rational den = 1 - w.d(1);
    return ceil_int(Rational(w.d(1) / den)) + ceil_int(Rational((w.d(1) - w.d(2)) / den));
}

int64_t factorial(int n) {
    int64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

using Vec = std::vector<Rational>;

// Whether p lies in the closed triangle conv(a, b, c) (points of equal dimension).
bool in_closed_triangle(const Vec& p, const Vec& a, const Vec& b, const Vec& c) {
    const size_t n = p.size();
    // rows: (b-a, c-a | p-a)
    std::vector<std::array<Rational, 3>> rows(n);
    for (size_t i = 0; i < n; ++i) rows[i] = {b[i] - a[i], c[i] - a[i], p[i] - a[i]};
    size_t rank = 0;
    std::array<int, 2> pivot_row{-1, -1};
    for (int col = 0; col < 2; ++col) {
        size_t piv = rank;
        while (piv < n && rows[piv][static_cast<size_t>(col)] == 0) ++piv;
        if (piv == n) continue;
        std::swap(rows[piv], rows[rank]);
        for (size_t r = 0; r < n; ++r) {
            if (r == rank || rows[r][static_cast<size_t>(col)] == 0) continue;
            Rational factor = rows[r][static_cast<size_t>(col)] / rows[rank][static_cast<size_t>(col)];
            for (size_t t = 0; t < 3; ++t) rows[r][t] -= factor * rows[rank][t];
        }
        pivot_row[static_cast<size_t>(col)] = static_cast<int>(rank);
        ++rank;
    }
    for (size_t r = rank; r < n; ++r)
        if (rows[r][2] != 0) return false;
    Rational st[2] = {0, 0};
    for (int col = 0; col < 2; ++col) {
        int r = pivot_row[static_cast<size_t>(col)];
        if (r < 0) return false;  // degenerate triangle does not occur for the faces used here
        st[col] = rows[static_cast<size_t>(r)][2] / rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
    }
    return st[0] >= 0 && st[1] >= 0 && st[0] + st[1] <= 1;
}

}  // namespace

std::vector<GFunction> all_g(int l) {
    std::vector<GFunction> out;
    const int n = l - 1;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        GFunction g{l, std::vector<int>(static_cast<size_t>(n))};
        // g(2) is the most significant bit so the list runs in lexicographic order
        for (int b = 0; b < n; ++b) g.bits[static_cast<size_t>(b)] = static_cast<int>(mask >> (n - 1 - b) & 1);
        out.push_back(g);
    }
    return out;
}

std::vector<FFunction> all_f(int l, int64_t a) {
    std::vector<FFunction> out;
    const int n = l - 1;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        FFunction f{l, {a}};
        for (int b = 0; b < n; ++b) f.values.push_back(f.values.back() + static_cast<int64_t>(mask >> (n - 1 - b) & 1));
        out.push_back(f);
    }
    return out;
}

FFunction full_f(int l, int64_t a) {
    FFunction f{l, {}};
    for (int i = 1; i <= l; ++i) f.values.push_back(a + i - 1);
    return f;
}

int64_t psi(const SymplecticClass& w, const GFunction& g) {
    Rational num = w.d(1);
    for (int i = 2; i <= g.l; ++i)
        if (g(i)) num -= w.d(i);
    return ceil_int(Rational(num / (1 - w.d(1))));
}

int64_t phi(const FFunction& f, const GFunction& g) {
    int64_t prod = 1;
    for (int i = 2; i <= f.l; ++i) {
        int64_t step = f(i) - f(i - 1);
        int64_t sign = g(i) ? -1 : 1;  // (-1)^{g(i)}
        prod *= (1 - g(i)) * f(i - 1) - sign * (step + 1);
    }
    return prod;
}

int64_t a_pow_t(int64_t a, const std::vector<int>& t) {
    int64_t r = 1;
    for (size_t k = 0; k < t.size(); ++k)
        for (int e = 0; e < t[k]; ++e) r *= a + static_cast<int64_t>(k);
    return r;
}

int64_t sum_a_pow_t(int64_t a, int n) {
    if (n <= 0) return 0;
    int64_t total = 0;
    // compositions of n <-> subsets of the n-1 cut points
    for (uint64_t mask = 0; mask < (uint64_t{1} << (n - 1)); ++mask) {
        std::vector<int> t{1};
        for (int b = 0; b < n - 1; ++b) {
            if (mask >> b & 1) t.push_back(1);
            else t.back()++;
        }
        total += a_pow_t(a, t);
    }
    return total;
}

int64_t a_pow_g(int64_t a, const GFunction& g) {
    int64_t s = 0;
    for (const auto& f : all_f(g.l, a)) s += phi(f, g);
    return s;
}

int64_t count_minimal(const SymplecticClass& w) {
    if (!is_reduced(w)) throw LatticeError("symplectic class " + w.str() + " is not reduced");
    if (w.space.is_quadric()) return 3 * ceil_int(w.mu) + (w.mu == 1 ? 2 : 3);
    if (w.space.l == 0) return 3;
    if (w.space.l == 1) return 3 * ceil_int(Rational(w.d(1) / (1 - w.d(1)))) + 4;
    throw LatticeError("count_minimal covers CP^2, M1 and the quadric");
}

int64_t count_m2_general(const SymplecticClass& w) {
    require_space(w, 2);
    if (w.d(1) == w.d(2)) return 13;
    return 7 * m2_ceilings(w) + 12;
}

int64_t count_m2_toric(const SymplecticClass& w) {
    require_space(w, 2);
    if (w.d(1) == w.d(2)) return 1;
    return m2_ceilings(w);
}

std::string RegionLabel::str() const {
    if (family == "OM" || family == "12" || family == "13" || family == "14") return family;
    return family + "[i=" + std::to_string(i) + "]";
}

RegionLabel classify_m2(const SymplecticClass& w) {
    require_space(w, 2);
    if (w.d(1) == w.d(2)) return {"OM", 0};
    for (int64_t i = 0;; ++i) {
        if (f2(w, i) > 0 && f1(w, i + 1) <= 0) return {"QQP", static_cast<int>(i)};
        if (f1(w, i + 1) > 0 && f2(w, i + 1) <= 0) return {"PPQ", static_cast<int>(i + 1)};
        if (f1(w, i + 1) <= 0) throw std::logic_error("unclassified M2 point " + w.str());
    }
}

RegionLabel classify_m3(const SymplecticClass& w) {
    require_space(w, 3);
    const Rational &d1 = w.delta[0], &d2 = w.delta[1], &d3 = w.delta[2];
    const Rational sum = d1 + d2 + d3;
    if (d1 == d2 && d2 == d3) return {"14", 0};
    if (d1 == d2) return {sum < 1 ? "12" : "13", 0};
    if (d2 == d3 && sum == 1) {
        int i = 1;
        while (d1 > Rational(i + 1, i + 3)) ++i;
        return {"11", i};
    }
    int i = 1;
    while (f1(w, i) > 0) ++i;
    const bool on_top = sum == 1, on_side = d2 == d3;
    if (f2(w, i - 1) > 0) {
        if (f3(w, i) <= 0) return {on_top ? "8" : on_side ? "5" : "1", i};
        return {on_side ? "6" : "2", i};
    }
    const int j = i - 1;
    if (f4(w, j) <= 0) return {on_top ? "9" : on_side ? "7" : "3", j};
    return {on_top ? "10" : "4", j};
}

int64_t m3_region_value(const RegionLabel& r) {
    const int64_t i = r.i;
    const int fam = std::stoi(r.family);
    switch (fam) {
        case 1: return 10 * i - 2;
        case 2: return 10 * i;
        case 3: return 10 * i + 3;
        case 4: return 10 * i + 5;
        case 5: return 4 * i - 1;
        case 6: return 4 * i;
        case 7: return 4 * i + 1;
        case 8: return 4 * i;
        case 9: return 4 * i + 2;
        case 10: return 4 * i + 3;
        case 11: return i + 1;
        case 12: return 3;
        case 13: return 2;
        case 14: return 1;
    }
    throw std::logic_error("unknown M3 region family " + r.family);
}

int64_t count_m3_toric(const SymplecticClass& w) {
    require_space(w, 3);
    const Rational &d1 = w.delta[0], &d2 = w.delta[1], &d3 = w.delta[2];
    const bool open = d1 + d2 + d3 < 1;
    int64_t total = 1;  // n = 1
    // n = 2
    if (d1 > d2 && d2 > d3) total += open ? 7 : 3;
    else if (d1 > d2 || d2 > d3) total += open ? 2 : 1;
    for (int64_t k = 1;; ++k) {
        Rational a = f1(w, k), b = f2(w, k);
        // n = 2k+1
        if (a > 0) total += d2 > d3 ? (open ? 5 : 2) : (open ? 2 : 1);
        else if (f3(w, k) > 0) total += d2 > d3 ? 2 : 1;
        // n = 2k+2
        if (b > 0) total += d2 > d3 ? (open ? 5 : 2) : (open ? 2 : 1);
        else if (f4(w, k) > 0) total += open ? 2 : 1;
        if (f3(w, k) <= 0 && f4(w, k) <= 0) break;
    }
    return total;
}

Point3 m3_P(int i) { return {Rational(i + 1, i + 3), Rational(1, i + 3), Rational(1, i + 3)}; }
Point3 m3_Q(int i) { return {Rational(i, i + 1), Rational(0), Rational(0)}; }
Point3 m3_R(int i) { return {Rational(i + 1, i + 2), Rational(1, i + 2), Rational(0)}; }

FormulaValue restrictive_count_general(const SymplecticClass& w) {
    if (w.space.is_quadric() || w.space.l < 2) throw LatticeError("restrictive formulas need M_l with l >= 2");
    if (!is_c1_nef(w)) throw LatticeError("symplectic class " + w.str() + " is not reduced c1-nef");
    const int l = w.space.l;
    int64_t total = 1 + (int64_t{1} << l) + sum_a_pow_t(2, l - 1) + sum_a_pow_t(3, l - 1);
    for (int n = 1; n <= l - 1; ++n) total += sum_a_pow_t(2, n);
    for (const auto& g : all_g(l)) {
        int64_t halves = a_pow_g(2, g) + a_pow_g(4, g);
        if (halves % 2 != 0) throw std::logic_error("odd 2^g + 4^g");
        total += (1 + halves / 2 + a_pow_g(3, g)) * std::max<int64_t>(0, psi(w, g));
    }
    return {total, is_restrictive(w)};
}

FormulaValue restrictive_count_toric(const SymplecticClass& w) {
    if (w.space.is_quadric() || w.space.l < 2) throw LatticeError("restrictive formulas need M_l with l >= 2");
    if (!is_c1_nef(w)) throw LatticeError("symplectic class " + w.str() + " is not reduced c1-nef");
    const int l = w.space.l;
    const auto F = full_f(l, 4);
    int64_t total = 0;
    for (const auto& g : all_g(l)) {
        int64_t p = phi(F, g);
        if (p % 2 != 0) throw std::logic_error("odd phi(F_l^4, g)");
        total += p / 2 * std::max<int64_t>(0, psi(w, g));
    }
    return {total, is_restrictive(w)};
}

RelationCheck lemma_relation_check(int64_t a, int l) {
    RelationCheck rc;
    for (const auto& f : all_f(l, a))
        for (const auto& g : all_g(l)) rc.lhs += phi(f, g);
    rc.rhs = 2 * sum_a_pow_t(a, l - 1);
    return rc;
}

int64_t kkp_upper_bound(int l, const Rational& d1, const Rational& d2) {
    if (l < 2) throw LatticeError("the bound is stated for l >= 2");
    Rational den = 1 - d1;
    int64_t c = ceil_int(Rational(d1 / den)) + ceil_int(Rational((d1 - d2) / den));
    return c * (factorial(l + 2) / factorial(4));
}

bool toric_region_member(const SymplecticClass& w) {
    if (!is_c1_nef(w)) throw LatticeError("symplectic class " + w.str() + " is not reduced c1-nef");
    if (w.space.is_quadric() || w.space.l <= 3) return true;
    const int l = w.space.l;
    const auto d = [&](int i) { return w.d(i); };
    if (l == 4) {
        bool on_mo = d(1) == d(2) && d(2) == d(3) && d(3) == d(4);
        bool on_ma = d(1) + d(2) + d(3) == 1 && d(2) == d(3) && d(3) == d(4);
        return !(on_mo || on_ma);
    }
    if (l == 5) {
        const Rational t(1, 3), h(1, 2), q(1, 4);
        const Vec M{t, t, t, t, t}, O{0, 0, 0, 0, 0}, A{1, 0, 0, 0, 0}, D{t, t, t, t, 0}, X{h, q, q, q, q};
        const Vec p(w.delta.begin(), w.delta.end());
        bool deleted = in_closed_triangle(p, M, O, D) || in_closed_triangle(p, M, A, D) || in_closed_triangle(p, M, O, X);
        return !deleted;
    }
    throw LatticeError("toric region descriptions are available for l <= 5");
}

}  // namespace lcy
