#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sga/signed_graph.hpp"  // Vertex, VertexPair

namespace sga {

struct SimpleGraph {
    std::set<Vertex> vertices;
    std::set<VertexPair> edges;

    void validate() const;
    bool adjacent(Vertex a, Vertex b) const { return edges.count(make_pair_norm(a, b)) != 0; }
    std::set<Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    SimpleGraph induced(const std::set<Vertex>& w) const;
    bool is_clique(const std::set<Vertex>& c) const;
    bool is_complete() const;
    bool operator==(const SimpleGraph&) const = default;
};

/// Chordless cycle of length >= 4, listed in cyclic order.
using ChordlessCycle = std::vector<Vertex>;

/// Perfect elimination ordering (v1..vl) with each v_i simplicial in
/// g[{v1..vi}], or a chordless-cycle witness when the graph is not chordal.
struct PeoResult {
    std::optional<std::vector<Vertex>> order;
    ChordlessCycle chordless;
};

PeoResult perfect_elimination_ordering(const SimpleGraph& g);

bool is_chordal(const SimpleGraph& g);

std::set<std::set<Vertex>> minimal_vertex_separators(const SimpleGraph& g);

std::vector<std::set<Vertex>> maximal_cliques(const SimpleGraph& g);

struct CliqueSeparatorGraph {
    std::vector<std::set<Vertex>> clique_nodes;
    std::vector<std::set<Vertex>> separator_nodes;
    // node addressing: cliques first, then separators
    std::set<std::pair<int, int>> cs_edges;  // (clique index, separator index)
    std::set<std::pair<int, int>> arcs;      // (separator index, separator index), S strictly inside S'
    std::vector<std::vector<int>> boxes;     // node ids; cliques are 0..C-1, separators C..C+S-1
    std::vector<int> sink_boxes;             // indices into boxes

    int num_cliques() const { return static_cast<int>(clique_nodes.size()); }
    const std::set<Vertex>& node(int id) const {
        return id < num_cliques() ? clique_nodes[id] : separator_nodes[id - num_cliques()];
    }
    bool is_clique_node(int id) const { return id < num_cliques(); }
};

/// Clique-separator graph. Throws with a chordless-cycle message for
/// non-chordal input; use perfect_elimination_ordering to get the witness.
CliqueSeparatorGraph build_csg(const SimpleGraph& g);

std::string csg_to_dot(const CliqueSeparatorGraph& csg);

enum class ThresholdStep { isolated, dominating };

struct ThresholdCertificate {
    bool threshold;
    // positive: replaying build_sequence reconstructs the graph
    std::vector<std::pair<Vertex, ThresholdStep>> build_sequence;
    // negative: 4 vertices inducing one of the forbidden subgraphs
    std::vector<Vertex> witness_vertices;
    std::string witness_kind;  // "2K2", "C4" or "P4"
};

ThresholdCertificate is_threshold(const SimpleGraph& g);

/// True iff l is an initial segment of some degree ordering of g.
bool degree_orderings_initial_segment(const SimpleGraph& g, const std::set<Vertex>& l);

}  // namespace sga
