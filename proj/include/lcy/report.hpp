#pragma once

#include "lcy/delzant.hpp"
#include "lcy/enumerate.hpp"
#include "lcy/formulas.hpp"
#include "lcy/mutation.hpp"

#include <json.hpp>

#include <string>

namespace lcy {

using Json = nlohmann::ordered_json;

constexpr const char* tool_version() { return "lcy 1.0.0"; }

Json class_json(const HomologyClass& a);
Json symplectic_json(const SymplecticClass& w);
Json config_json(const CyclicConfig& c, const SymplecticClass& w);
Json enumeration_json(const EnumerationResult& r);
Json boundary_json(const BoundaryData& b);
Json polygon_json(const DelzantPolygon& p);
Json gs_json(const GSReport& g);
Json mutation_graph_json(const MutationGraph& g);
Json realization_json(const RealizationReport& r);
Json taut_json(const std::vector<int64_t>& seq, const TautResult& t);

// One line per configuration: index, length, toric flag, classes.
std::string enumeration_tsv(const EnumerationResult& r);
// One line per class: coefficients, square, genus, area.
std::string catalog_tsv(const std::vector<HomologyClass>& cat, const SymplecticClass& w);

std::string mutation_graph_dot(const MutationGraph& g);
// Static SVG: lattice dots and grid lines, outline, per-edge "s/a" labels.
std::string polygon_svg(const DelzantPolygon& p);

// FNV-1a, 64 bit, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace lcy
