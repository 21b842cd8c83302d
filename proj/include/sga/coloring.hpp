#pragma once

#include "sga/intpoly.hpp"
#include "sga/signed_graph.hpp"

namespace sga {

/// Number of proper k-colorings V -> {0, +-1, ..., +-k}.
mpz_class count_proper_colorings(const SignedGraph& g, int k);

/// The signed chromatic polynomial, by exact interpolation of coloring counts
/// at t = 3, 5, ..., 2|V|+3.
IntPoly chromatic_polynomial(const SignedGraph& g);

/// Checks chi(G) * chi(B_n) == chi(G1) * chi(G2) for a gluing of g1, g2 along
/// the complete signed graph with loops on `shared`. Throws on a malformed
/// gluing (overlap not exactly `shared`, or shared part not B_n in both).
bool gluing_check(const SignedGraph& g1, const SignedGraph& g2, const std::set<Vertex>& shared);

/// Union of two graphs agreeing on their common vertices.
SignedGraph graph_union(const SignedGraph& g1, const SignedGraph& g2);

}  // namespace sga
