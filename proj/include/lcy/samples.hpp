#pragma once

#include "lcy/lattice.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lcy {

// Fixed sample sets shared by selftest, the acceptance runner and the tests.
// Every generator is deterministic: random ones use mt19937 with the given
// seed and read raw draws only, so they agree across standard libraries.

struct NamedSample {
    std::string tag;  // region, face or family name
    int i = 0;        // region index where it applies
    SymplecticClass w;
};

std::vector<SymplecticClass> minimal_model_samples();

// Barycentric grid points of every region PPQ(i), QQP(i) with i <= 4 (interior
// plus the interior of the included edge) and points on the OM wall.
std::vector<NamedSample> m2_region_samples(int resolution = 7);

// Centroid of the vertex set of each of the 14 region families, i in {1, 2}.
std::vector<NamedSample> m3_family_samples();
// Reduced c1-nef points (a, b, c)/N for the listed denominators.
std::vector<SymplecticClass> m3_grid_samples(const std::vector<int>& denominators);

std::vector<SymplecticClass> restrictive_samples(int l, int count, uint32_t seed);
// Interior (strictly decreasing, sum < 1) but not restrictive.
std::vector<SymplecticClass> nonrestrictive_interior_samples(int l, int count, uint32_t seed);
// Reduced c1-nef points with strictly decreasing deltas.
std::vector<SymplecticClass> random_reduced_samples(int l, int count, uint32_t seed);

// l = 4: tags "MO", "MA" (deleted edges) and "interior".
// l = 5: tags "MOD", "MAD", "MOX" (deleted faces, X included), "interior", "XOA".
std::vector<NamedSample> toric_region_samples(int l);

}  // namespace lcy
