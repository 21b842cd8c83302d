#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sga/signed_graph.hpp"
#include "sga/simple_graph.hpp"

namespace sga {

enum class EdgeClass {
    general,         // each pair independently absent, +, -, or both
    doubled_subset,  // each pair absent, +, or both (negative edges doubled)
};

enum class LoopPolicy { none, full, random_pick };

SignedGraph random_signed_graph(int n, std::mt19937_64& rng, EdgeClass cls, LoopPolicy loops);

/// All signed graphs on {1..n} with doubled negative edges and loops at every
/// vertex (3 states per pair).
std::vector<SignedGraph> all_doubled_full_loops(int n);

/// All signed graphs on {1..n}: 4 states per pair, every loop subset.
std::vector<SignedGraph> all_signed_graphs(int n);

/// All graphs with complete positive part: every negative edge subset and
/// every loop subset.
std::vector<SignedGraph> all_complete_positive(int n);

/// Random chordal graph built by attaching each vertex to a clique.
SimpleGraph random_chordal(int n, std::mt19937_64& rng);

}  // namespace sga
