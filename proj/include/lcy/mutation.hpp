#pragma once

#include "lcy/delzant.hpp"
#include "lcy/enumerate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lcy {

struct MutationMove {
    int vertex = 0;       // vertex of the source polygon
    LatticeVector ray;    // u1 + u2
    int exit_edge = 0;    // edge of the source polygon where the ray leaves
    // 0: the part containing the outgoing edge u1 is sheared, 1: the part containing u2
    int side = 0;
    std::string str() const;
};

struct MutationOutcome {
    enum class Status { Accepted, RayHitsVertex, NotDelzant };
    Status status = Status::NotDelzant;
    MutationMove move;
    DelzantPolygon result;  // set when accepted
};

const char* status_name(MutationOutcome::Status s);

// Both shear sides at vertex v; each accepted outcome has the same area as p.
std::vector<MutationOutcome> toric_mutations(const DelzantPolygon& p, int v);
// First accepted outcome at v, or the rejection reason.
MutationOutcome toric_mutate(const DelzantPolygon& p, int v);

struct MutationEdge {
    int from = 0, to = 0;
    MutationMove move;
};

struct MutationGraph {
    SymplecticClass w;
    std::vector<CyclicConfig> nodes;    // toric representatives in enumerator order
    std::vector<BoundaryData> boundary;  // canonical (s, a) per node
    std::vector<MutationEdge> moves;    // every accepted move between distinct nodes
    std::vector<std::pair<int, int>> edges;  // undirected, sorted, deduplicated
    int self_loops = 0;
    int out_of_set = 0;  // accepted mutations whose (s, a) matches no node
    int vertex_hits = 0;
    int non_delzant = 0;
    int irreversible = 0;  // moves i -> j without any move j -> i
};

// Throws if two nodes share their (s, a) up to dihedral relabeling.
MutationGraph mutation_graph(const SymplecticClass& w);
bool is_connected(const MutationGraph& g);
// Shortest list of moves from node a to node b, if any.
std::optional<std::vector<MutationEdge>> mutation_path(const MutationGraph& g, int a, int b);

struct RealizationReport {
    SymplecticClass w;
    int toric = 0;
    int total = 0;
    std::vector<CyclicConfig> covered;    // representatives reached by smoothing toric ones
    std::vector<CyclicConfig> uncovered;  // the rest of LCY
    int closure_escapes = 0;               // smoothings outside the enumerated set
};

RealizationReport realization_report(const SymplecticClass& w);

}  // namespace lcy
