#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sga/signed_graph.hpp"

namespace sga {

struct ChordRefutation {
    SignedEdge chord;
    std::string reason;  // which split sub-cycle is unbalanced
};

/// A balanced cycle of length >= 4 with no balanced chord, plus a refutation
/// for every candidate chord.
struct BalancedCycleWitness {
    Cycle cycle;
    std::vector<ChordRefutation> checked_chords;
};

enum class FrameCircuitShape { balanced_cycle, loose_handcuff, tight_handcuff };

struct FrameCircuit {
    FrameCircuitShape kind;
    std::set<SignedEdge> support;
};

bool is_signed_simplicial(const SignedGraph& g, Vertex v);

/// Full signed elimination ordering, by memoized backtracking.
std::optional<std::vector<Vertex>> signed_elimination_ordering(const SignedGraph& g);

/// nullopt = balanced chordal; otherwise a verified witness.
std::optional<BalancedCycleWitness> is_balanced_chordal(const SignedGraph& g);

/// All cycles of g as (vertex sequence, edge sign choices), length >= 3,
/// canonical up to rotation and reflection. Loops and +/- pairs are reported
/// by the 1-/2-cycle helpers inside find_frame_circuits only.
std::vector<Cycle> enumerate_cycles(const SignedGraph& g, int min_len);

std::vector<FrameCircuit> find_frame_circuits(const SignedGraph& g, int max_edges);

/// True iff no edge outside f closes a frame circuit with edges of f, i.e.
/// A(F) is a localization of A(G).
bool is_flat_subgraph(const SignedGraph& g, const std::set<SignedEdge>& f);

bool divisional_edge(const SignedGraph& g, const DirectedEdge& e);

struct PeelResult {
    SignedGraph base;
    std::vector<Vertex> peeled;  // in removal order
};

/// Repeatedly removes a signed-simplicial vertex (lowest id first) until none
/// remains; g is a simplicial extension of base via the reversed peel list.
PeelResult peel_simplicial_extension(const SignedGraph& g);

}  // namespace sga
