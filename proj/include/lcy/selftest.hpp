#pragma once

#include "lcy/report.hpp"

namespace lcy {

struct SelftestResult {
    Json artifact;
    int checks = 0;
    int mismatches = 0;
};

// Formulas against the enumerator over the built-in sample sets, plus the
// polygon, mutation, realization and tautness oracles. Deterministic.
SelftestResult run_selftest();

}  // namespace lcy
