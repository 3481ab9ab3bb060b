#pragma once

#include "lcy/config.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace lcy {

struct DelzantError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LatticeVector {
    int64_t x = 0, y = 0;

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend LatticeVector operator+(LatticeVector a, LatticeVector b) { return {a.x + b.x, a.y + b.y}; }
    friend LatticeVector operator-(LatticeVector a, LatticeVector b) { return {a.x - b.x, a.y - b.y}; }
    friend LatticeVector operator*(int64_t k, LatticeVector a) { return {k * a.x, k * a.y}; }
    std::string str() const;
};

int64_t det(LatticeVector a, LatticeVector b);

// d_1 = (0,-1), d_2 = (1,0), d_{i+1} = -s_i d_i - d_{i-1}; d holds d_1 .. d_{k+2}
// so the wrap-around relations can be read off directly.
struct GeneratingSet {
    std::vector<int64_t> s;
    std::vector<LatticeVector> d;

    const LatticeVector& at(int i) const { return d[static_cast<size_t>(i - 1)]; }  // 1-based
    // d_{k+1} = d_1 and d_{k+2} = d_2
    bool closes() const;
    // det(d_i, d_{i+1}) = 1 for i = 1..k
    bool unimodular() const;
    // Number of turns of d_1, ..., d_k, d_1 around the origin.
    int winding_number() const;
};

GeneratingSet generating_set(const std::vector<int64_t>& s);

using Point = std::array<Rational, 2>;

// Vertices counterclockwise; edge i runs from vertices[i] to vertices[i+1].
struct DelzantPolygon {
    std::vector<Point> vertices;

    int size() const { return static_cast<int>(vertices.size()); }
    const Point& at(int i) const;  // cyclic index
    Rational area() const;         // Euclidean
};

// Q_1 = 0, Q_{i+1} = Q_i + a_i d_i. Throws DelzantError unless (s, a) is toric data.
DelzantPolygon build_polygon(const std::vector<int64_t>& s, const std::vector<Rational>& a);
DelzantPolygon build_polygon(const CyclicConfig& c, const SymplecticClass& w);

// Primitive integer direction of a nonzero rational vector.
LatticeVector primitive_direction(const Point& v);
// v = t * primitive_direction(v); returns t.
Rational affine_length(const Point& v);

bool is_delzant(const DelzantPolygon& p);

struct BoundaryData {
    std::vector<int64_t> s;
    std::vector<Rational> a;

    friend bool operator==(const BoundaryData&, const BoundaryData&) = default;
    std::string str() const;
};

// s_i = -det(u_{i-1}, u_{i+1}) for primitive edge directions u; a_i = affine length.
BoundaryData boundary_data(const DelzantPolygon& p);
BoundaryData boundary_data(const CyclicConfig& c, const SymplecticClass& w);
// Smallest rotation/reflection of (s, a), compared as (s, a) sequences.
BoundaryData canonical_boundary(const BoundaryData& b);
bool same_up_to_dihedral(const BoundaryData& x, const BoundaryData& y);

// Chops the corner at vertex v (between edges v-1 and v) by size eps.
DelzantPolygon chop_corner(const DelzantPolygon& p, int v, const Rational& eps);

struct GSReport {
    int k = 0;
    int nullity = 0;
    bool solvable = false;
    bool positive = false;  // some solution with all z_i > 0
    bool negative = false;  // some solution with all z_i <= 0
    std::vector<Rational> positive_witness;
    std::vector<Rational> negative_witness;
    std::vector<std::vector<int64_t>> matrix;
};

// Q_D: diagonal s_i, adjacent entries 1 (2 when k = 2); solves Q_D z = a.
GSReport gs_solve(const CyclicConfig& c, const SymplecticClass& w);
GSReport gs_solve(const std::vector<int64_t>& s, const std::vector<Rational>& a);

using Matrix2 = std::array<int64_t, 4>;  // row major
Matrix2 mat_mul(const Matrix2& a, const Matrix2& b);
constexpr Matrix2 identity2() { return {1, 0, 0, 1}; }

// Product T(s_k) ... T(s_1) with T(s) = [[0, 1], [-1, -s]].
Matrix2 monodromy(const std::vector<int64_t>& s);

// Continued fractions [b_1, ..., b_k] = b_1 - 1/(b_2 - ...), evaluated formally
// on pairs (p, q) ~ p/q so that a zero denominator gives infinity.
struct CfValue {
    bool infinite = false;
    Rational value;
    std::string str() const;
    friend bool operator==(const CfValue&, const CfValue&) = default;
};

CfValue cf_eval(const std::vector<Rational>& b);
CfValue cf_eval(const std::vector<int64_t>& b);
// Every denominator [n_j, ..., n_k], j >= 2, is positive.
bool cf_admissible(const std::vector<int64_t>& n);

struct PhiInput {
    std::vector<int64_t> n;  // n_1 .. n_{k+1}
    std::vector<int64_t> a;  // a_1 .. a_{k+1}
    std::string str() const;
    friend bool operator==(const PhiInput&, const PhiInput&) = default;
};

// Membership in the domain of phi_map.
bool phi_domain(const PhiInput& x);
// (1, 1-(n_1+a_1), -(n_2+a_2), ..., -(n_k+a_k), 1-(n_{k+1}+a_{k+1}))
std::vector<int64_t> phi_map(const PhiInput& x);
// All domain elements mapping to seq (which must have the blown-up shape).
std::vector<PhiInput> phi_preimages(const std::vector<int64_t>& seq);

struct TautResult {
    enum class Verdict { Taut, NotTaut, Undecided };
    Verdict verdict = Verdict::Undecided;
    std::string family;  // "blown-up", "(1,p)", "(-1,-p)", "(1,1,p)", "(0,p)" or ""
    std::vector<PhiInput> preimages;
    std::string str() const;
};

TautResult def_taut(const std::vector<int64_t>& seq);

}  // namespace lcy
