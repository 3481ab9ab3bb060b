#pragma once

#include "lcy/lattice.hpp"

#include <vector>

namespace lcy {

// Members of the class catalog H_l (or its toric part tH_l) that have positive
// area under w. Classes of the family kH-(k-1)E1-... are kept only while their
// area stays below the total c1-area, since each one must leave room for the
// rest of a configuration of length >= 2. c1 itself is included (it is the
// length-1 configuration). Sorted lexicographically.
std::vector<HomologyClass> catalog_members(const SymplecticClass& w);
std::vector<HomologyClass> toric_catalog_members(const SymplecticClass& w);

// Negative sphere classes of square -n on M2 or M3 from the classification
// table, filtered by positive area.
std::vector<HomologyClass> negative_sphere_classes(int l, int n, const SymplecticClass& w);

// Every class occurring in some minimal-model family of the quadric with
// positive area (F, B, 2F+2B, ...), sorted.
std::vector<HomologyClass> quadric_catalog(const SymplecticClass& w);

}  // namespace lcy
