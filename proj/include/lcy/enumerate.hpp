#pragma once

#include "lcy/config.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lcy {

struct EnumerationStats {
    std::map<int, int> raw_by_length;       // before the wall quotient
    std::map<int, int> classes_by_length;   // after the wall quotient
    std::vector<HomologyClass> generators;  // reflections used for the quotient
    int catalog_size = 0;
    long long search_nodes = 0;
    // reflected configurations that fell outside the enumerated set
    int orbit_escapes = 0;
    std::string method;  // "search" or "families"
};

struct EnumerationResult {
    SymplecticClass w;
    // One canonical representative per equivalence class, sorted by
    // (length, classes). Representatives are the smallest canonical form in
    // their reflection orbit.
    std::vector<CyclicConfig> all;
    std::vector<CyclicConfig> toric;
    std::optional<CyclicConfig> elliptic;
    // Every enumerated canonical configuration (before the quotient) mapped to
    // the canonical key of its representative.
    std::map<std::string, std::string> representative_of;
    EnumerationStats stats;

    int count() const { return static_cast<int>(all.size()); }
    int toric_count() const { return static_cast<int>(toric.size()); }
};

// LCY(M_l, w) (or only its toric part). CP^2, M1 and the quadric use the
// closed family lists of the minimal models; l >= 2 uses the catalog search.
EnumerationResult enumerate_lcy(const SymplecticClass& w, bool toric_only = false, int workers = 1);

// Catalog backtracking search for any Blowup(l), including l = 0 and l = 1;
// used as the second route for the minimal models. The first class of each
// cycle is striped over `workers` threads; the output does not depend on it.
EnumerationResult enumerate_by_search(const SymplecticClass& w, bool toric_only = false, int workers = 1);

// Closed family lists of the minimal models (CP^2, M1, quadric).
EnumerationResult enumerate_minimal_families(const SymplecticClass& w, bool toric_only = false);

// Closure under single smoothings at every adjacency, including the inputs.
std::vector<CyclicConfig> smoothing_closure(const std::vector<CyclicConfig>& configs);

struct StabilityReport {
    bool comparable = false;  // identical catalogs and reflection generators
    bool identical = false;   // identical enumeration output (checked when comparable)
};

// Throws if the catalogs agree but the enumerations do not.
StabilityReport stability_check(const SymplecticClass& w1, const SymplecticClass& w2);

}  // namespace lcy
