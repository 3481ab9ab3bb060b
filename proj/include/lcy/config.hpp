#pragma once

#include "lcy/lattice.hpp"

#include <string>
#include <vector>

namespace lcy {

// A cyclic sequence of classes (A_1, ..., A_k), read up to rotation and
// reversal. Adjacency i is the pair (A_i, A_{i+1 mod k}), indices 0-based.
struct CyclicConfig {
    AmbientSpace space;
    std::vector<HomologyClass> classes;

    CyclicConfig() = default;
    CyclicConfig(AmbientSpace s, std::vector<HomologyClass> cs);

    int length() const { return static_cast<int>(classes.size()); }
    const HomologyClass& at(int i) const;  // cyclic index
    std::string str() const;

    friend bool operator==(const CyclicConfig& a, const CyclicConfig& b) {
        return a.space == b.space && a.classes == b.classes;
    }
};

struct Validation {
    bool ok = true;
    std::vector<std::string> violations;
};

// Intersection pattern, genus and total class; area positivity when w is given.
Validation validate(const CyclicConfig& c);
Validation validate(const CyclicConfig& c, const SymplecticClass& w);

int64_t charge(const CyclicConfig& c);
bool is_toric(const CyclicConfig& c);
std::vector<int64_t> self_intersection_seq(const CyclicConfig& c);
std::vector<Rational> area_seq(const CyclicConfig& c, const SymplecticClass& w);

// Lexicographically smallest rotation/reflection, comparing coefficient vectors.
CyclicConfig canonicalize(const CyclicConfig& c);
std::string canonical_key(const CyclicConfig& c);

CyclicConfig smoothing(const CyclicConfig& c, int adjacency);
CyclicConfig toric_blow_up(const CyclicConfig& c, int adjacency);
CyclicConfig non_toric_blow_up(const CyclicConfig& c, int component);

struct ReductionStep {
    enum class Case { BlowDown, RemoveExceptional, Terminal };
    Case kind;
    int index;              // component acted on
    CyclicConfig result;    // on Blowup(l-1) unless Terminal (then the input)
};

const char* case_name(ReductionStep::Case c);

// One reduced-basis blow-down step on Blowup(l), l >= 2. Checks, in order:
// (b) exactly one A_i = E_l with k >= 3, (a) exactly one A_i with nonzero
// E_l-coefficient, (c) the terminal pair (3H-E_1-...-2E_l, E_l).
ReductionStep reduce_once(const CyclicConfig& c, const SymplecticClass& w);

// Iterates reduce_once down to Blowup(1) or a terminal pair.
CyclicConfig germ(const CyclicConfig& c, const SymplecticClass& w);

}  // namespace lcy
