#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sga {

using Vertex = int;
using VertexPair = std::pair<Vertex, Vertex>;  // always normalized a < b

inline VertexPair make_pair_norm(Vertex a, Vertex b) {
    if (a == b) throw std::invalid_argument("self-pair is not an edge; use loops");
    return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

enum class Sign { positive, negative };

inline Sign flip(Sign s) { return s == Sign::positive ? Sign::negative : Sign::positive; }

/// A signed edge reference: either a vertex pair with a sign, or a loop (u == v).
struct SignedEdge {
    Vertex u, v;  // u <= v; loop iff u == v
    Sign sign;    // loops are negative by convention

    auto operator<=>(const SignedEdge&) const = default;
};

struct DirectedEdge {
    Vertex from;  // removed by contraction
    Vertex to;    // survives
    Sign sign;
};

/// Signed graph: two simple graphs on a shared vertex set plus a loop set.
/// A pair may carry both signs (the unbalanced 2-cycle).
struct SignedGraph {
    std::set<Vertex> vertices;
    std::set<VertexPair> pos_edges;
    std::set<VertexPair> neg_edges;
    std::set<Vertex> loops;

    void validate() const;

    bool has_pos(Vertex a, Vertex b) const { return pos_edges.count(make_pair_norm(a, b)) != 0; }
    bool has_neg(Vertex a, Vertex b) const { return neg_edges.count(make_pair_norm(a, b)) != 0; }
    bool adjacent(Vertex a, Vertex b) const { return has_pos(a, b) || has_neg(a, b); }

    std::set<Vertex> neighbors(Vertex v) const;

    /// All signed edges including loops, sorted.
    std::vector<SignedEdge> signed_edges() const;

    size_t num_hyperplanes() const { return pos_edges.size() + neg_edges.size() + loops.size(); }

    /// Number of incident edges, counting a loop once.
    int degree(Vertex v) const;

    bool operator==(const SignedGraph&) const = default;
};

struct SwitchingFunction {
    // vertex -> +1/-1; must cover the graph's vertex set exactly
    std::vector<std::pair<Vertex, int>> signs;

    int at(Vertex v) const;
};

/// Complete signed graph with loops on the given vertices.
SignedGraph complete_signed(const std::set<Vertex>& vs);

SignedGraph induced_subgraph(const SignedGraph& g, const std::set<Vertex>& w);

SignedGraph apply_switching(const SignedGraph& g, const SwitchingFunction& nu);

SignedGraph contract(const SignedGraph& g, const DirectedEdge& e);

SignedGraph remove_vertex(const SignedGraph& g, Vertex v);

struct Component {
    std::set<Vertex> vertices;
    bool balanced;
};

std::vector<Component> balanced_components(const SignedGraph& g);

int rank(const SignedGraph& g);

bool is_connected(const SignedGraph& g);

enum class Balance { balanced, unbalanced };

/// A cycle: vertex sequence v1..vk with a chosen sign per consecutive edge
/// (and vk->v1). Length-1 cycles are loops, length-2 the +/- pair.
struct Cycle {
    std::vector<Vertex> vertices;
    std::vector<Sign> signs;  // signs[i] is the edge vertices[i]-vertices[i+1 mod k]; empty for 1-cycles
};

Balance cycle_balance(const SignedGraph& g, const Cycle& c);

// --- canonical JSON graph format ---
SignedGraph parse_graph_json(const std::string& text);
std::string graph_to_json(const SignedGraph& g);

}  // namespace sga
