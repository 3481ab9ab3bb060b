#pragma once

#include "lcy/rational.hpp"

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcy {

struct LatticeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// M_l = CP^2 # l (-CP^2) or the quadric S^2 x S^2.
struct AmbientSpace {
    enum class Kind { Blowup, Quadric };
    Kind kind = Kind::Blowup;
    int l = 0;

    static AmbientSpace blowup(int l);
    static AmbientSpace quadric() { return {Kind::Quadric, 0}; }

    bool is_quadric() const { return kind == Kind::Quadric; }
    int rank() const { return is_quadric() ? 2 : l + 1; }
    // "M3" or "quadric"
    std::string name() const;
    static AmbientSpace parse(const std::string& name);

    friend bool operator==(const AmbientSpace&, const AmbientSpace&) = default;
};

// Upper bound on l accepted by the enumeration entry points. Defaults to 6 and
// can be raised through LCY_MAX_L, never above hard_max_l().
int max_l();
constexpr int hard_max_l() { return 16; }

// Blowup(l): coeffs (h, e1, ..., el) meaning hH + e1 E1 + ... + el El.
// Quadric:   coeffs (f, b) meaning fF + bB.
struct HomologyClass {
    AmbientSpace space;
    std::vector<int64_t> coeffs;

    HomologyClass() = default;
    HomologyClass(AmbientSpace s, std::vector<int64_t> c);

    static HomologyClass zero(AmbientSpace s);
    static HomologyClass H(AmbientSpace s);
    static HomologyClass E(AmbientSpace s, int i);  // 1-based
    static HomologyClass F();
    static HomologyClass B();

    int64_t h() const { return coeffs[0]; }
    int64_t e(int i) const { return coeffs[static_cast<size_t>(i)]; }

    HomologyClass& operator+=(const HomologyClass& o);
    HomologyClass& operator-=(const HomologyClass& o);
    friend HomologyClass operator+(HomologyClass a, const HomologyClass& b) { return a += b; }
    friend HomologyClass operator-(HomologyClass a, const HomologyClass& b) { return a -= b; }
    friend HomologyClass operator*(int64_t k, HomologyClass a);
    HomologyClass operator-() const { return (-1) * *this; }

    friend bool operator==(const HomologyClass& a, const HomologyClass& b) {
        return a.space == b.space && a.coeffs == b.coeffs;
    }
    // Lexicographic on the coefficient vector; only meaningful within one space.
    friend bool operator<(const HomologyClass& a, const HomologyClass& b) { return a.coeffs < b.coeffs; }

    // Same class viewed in Blowup(l2), l2 >= l, padding with zero E-coefficients.
    HomologyClass lifted(int l2) const;

    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const HomologyClass& a);

struct SymplecticClass {
    AmbientSpace space;
    std::vector<Rational> delta;  // Blowup: (d1, ..., dl); lambda = 1
    Rational mu;                  // Quadric: area(B), area(F) = 1

    static SymplecticClass blowup(std::vector<Rational> delta);
    static SymplecticClass quadric(Rational mu);
    static SymplecticClass cp2() { return blowup({}); }

    // d_i with zero padding beyond l (1-based).
    Rational d(int i) const;
    std::string str() const;
};

int64_t intersect(const HomologyClass& a, const HomologyClass& b);
int64_t square(const HomologyClass& a);
HomologyClass c1(AmbientSpace s);
int64_t genus(const HomologyClass& a);
Rational area(const SymplecticClass& w, const HomologyClass& a);

bool is_reduced(const SymplecticClass& w);
bool is_c1_nef(const SymplecticClass& w);
bool is_restrictive(const SymplecticClass& w);
bool is_interior(const SymplecticClass& w);

// a + (a.m) m for a (-2)-class m.
HomologyClass reflect(const HomologyClass& a, const HomologyClass& mirror);
std::vector<HomologyClass> reflection_generators(const SymplecticClass& w);

}  // namespace lcy
