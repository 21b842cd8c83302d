#pragma once

#include "sga/signed_graph.hpp"
#include "sga/simple_graph.hpp"

namespace fixtures {

using sga::SignedGraph;
using sga::SimpleGraph;

/// Complete signed graph with loops on {1..l}.
inline SignedGraph b(int l) {
    std::set<sga::Vertex> vs;
    for (int i = 1; i <= l; ++i) vs.insert(i);
    return sga::complete_signed(vs);
}

/// Doubled triangle: every pair both positive and negative, no loops.
inline SignedGraph d3() {
    SignedGraph g = b(3);
    g.loops.clear();
    return g;
}

// The five 4-or-fewer-vertex graphs used for the non-freeness certificates.

inline SignedGraph g1() {
    SignedGraph g;
    g.vertices = {1, 2, 3, 4};
    g.pos_edges = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}};
    g.neg_edges = {{1, 2}, {3, 4}};
    return g;
}

inline SignedGraph f1() {
    SignedGraph g;
    g.vertices = {1, 2, 3, 4};
    g.pos_edges = {{1, 4}, {2, 3}};
    g.neg_edges = {{1, 2}, {3, 4}};
    return g;
}

inline SignedGraph g2() {
    SignedGraph g;
    g.vertices = {1, 2, 3, 4};
    g.pos_edges = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}};
    g.neg_edges = {{1, 2}, {1, 4}};
    return g;
}

inline SignedGraph f2() {
    SignedGraph g;
    g.vertices = {1, 2, 4};
    g.pos_edges = {{1, 2}, {1, 4}};
    g.neg_edges = {{1, 2}, {1, 4}};
    return g;
}

inline SignedGraph g3() {
    SignedGraph g;
    g.vertices = {1, 2, 3};
    g.pos_edges = {{1, 2}, {1, 3}, {2, 3}};
    g.neg_edges = {{2, 3}};
    g.loops = {1};
    return g;
}

/// The 9-vertex chordal graph whose clique-separator graph is known exactly.
inline SimpleGraph nine_vertex_chordal() {
    SimpleGraph g;
    for (int v = 1; v <= 9; ++v) g.vertices.insert(v);
    g.edges = {{1, 2}, {1, 5}, {1, 8}, {2, 3}, {2, 5}, {2, 8}, {3, 5}, {3, 6},
               {3, 8}, {4, 5}, {4, 7}, {4, 8}, {5, 8}, {6, 8}, {7, 8}, {8, 9}};
    return g;
}

}  // namespace fixtures
