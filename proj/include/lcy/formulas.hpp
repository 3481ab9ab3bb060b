#pragma once

#include "lcy/lattice.hpp"

#include <array>
#include <string>
#include <vector>

namespace lcy {

// g : {2..l} -> {0,1}; bits[i-2] = g(i).
struct GFunction {
    int l = 1;
    std::vector<int> bits;
    int operator()(int i) const { return bits[static_cast<size_t>(i - 2)]; }
};

// f : {1..l} -> Z_+, f(1) = a, steps 0 or 1; values[i-1] = f(i).
struct FFunction {
    int l = 1;
    std::vector<int64_t> values;
    int64_t operator()(int i) const { return values[static_cast<size_t>(i - 1)]; }
};

std::vector<GFunction> all_g(int l);
std::vector<FFunction> all_f(int l, int64_t a);
FFunction full_f(int l, int64_t a);  // F_l^a(i) = a + i - 1

// ceil((d1 - sum_{i>=2} g(i) d_i) / (1 - d1)), unclamped
int64_t psi(const SymplecticClass& w, const GFunction& g);
int64_t phi(const FFunction& f, const GFunction& g);
// a^t = a^{t1} (a+1)^{t2} ... (a+k-1)^{tk}
int64_t a_pow_t(int64_t a, const std::vector<int>& t);
// sum over compositions t of n (positive parts) of a^t
int64_t sum_a_pow_t(int64_t a, int n);
// a^g = sum_{f in F_l^a} phi(f, g)
int64_t a_pow_g(int64_t a, const GFunction& g);

// Closed forms for the minimal models: CP^2, quadric, M1.
int64_t count_minimal(const SymplecticClass& w);

int64_t count_m2_general(const SymplecticClass& w);
int64_t count_m2_toric(const SymplecticClass& w);

struct RegionLabel {
    // M2: "PPQ" (triangle P_i P_{i+1} Q_i), "QQP" (triangle Q_i Q_{i+1} P_{i+1}), "OM".
    // M3: "1".."14" with index i (unused for 12-14).
    std::string family;
    int i = 0;
    std::string str() const;
};

RegionLabel classify_m2(const SymplecticClass& w);
RegionLabel classify_m3(const SymplecticClass& w);
// Count stated for a region family of M3 (10i-2, 10i, ..., 1).
int64_t m3_region_value(const RegionLabel& r);
// Toric count on M3 as the sum over n of the per-self-intersection tables.
int64_t count_m3_toric(const SymplecticClass& w);

using Point3 = std::array<Rational, 3>;
Point3 m3_P(int i);  // ((i+1)/(i+3), 1/(i+3), 1/(i+3))
Point3 m3_Q(int i);  // (i/(i+1), 0, 0)
Point3 m3_R(int i);  // ((i+1)/(i+2), 1/(i+2), 0)

struct FormulaValue {
    int64_t value = 0;
    bool exact = false;  // false: strict upper bound (non-restrictive class)
};

FormulaValue restrictive_count_general(const SymplecticClass& w);
FormulaValue restrictive_count_toric(const SymplecticClass& w);

struct RelationCheck {
    int64_t lhs = 0, rhs = 0;
    bool holds() const { return lhs == rhs; }
};
// sum_{f in F_l^a, g in G_l} phi(f,g) versus 2 sum_{|t|=l-1} a^t
RelationCheck lemma_relation_check(int64_t a, int l);

int64_t kkp_upper_bound(int l, const Rational& d1, const Rational& d2);

// Whether the toric part of LCY is nonempty, from the region descriptions (l <= 5).
bool toric_region_member(const SymplecticClass& w);

}  // namespace lcy
