#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sga/signed_graph.hpp"
#include "sga/signed_struct.hpp"

namespace sga {

enum class TriBool { yes, no, unknown };

std::string tribool_str(TriBool t);

/// Complete supersolvability decision (signed elimination ordering, or the
/// base left after peeling signed-simplicial vertices is one of the two
/// exceptional shapes).
struct SSDecision {
    TriBool value = TriBool::unknown;
    std::string how;
    std::vector<Vertex> elimination_order;  // for the ordering branch
    std::vector<Vertex> peeled;             // for the exceptional-base branches
};

SSDecision zaslavsky_ss_decide(const SignedGraph& g);

/// Freeness for graphs whose positive part is complete: the negative part
/// must be threshold and the loops must sit on a top segment of the negative
/// degree ordering.
struct ERDecision {
    bool applicable = false;
    bool free = false;
    std::string reason;
};

ERDecision er_decide(const SignedGraph& g);

/// Freeness for graphs with every negative edge doubled by a positive one:
/// with loops everywhere, free iff balanced chordal; with partial loops only
/// the negative direction (not balanced chordal implies non-free) is known.
struct MainTheoremDecision {
    bool applicable = false;
    TriBool free = TriBool::unknown;
    std::string reason;
};

MainTheoremDecision main_theorem_decide(const SignedGraph& g);

/// A frame circuit with at least four edges whose support is a flat subgraph
/// and whose localized arrangement is non-free; its existence refutes
/// freeness of the whole arrangement.
std::optional<FrameCircuit> frame_circuit_refute(const SignedGraph& g);

struct Verdict {
    bool balanced_chordal = false;
    std::optional<BalancedCycleWitness> bc_witness;
    TriBool supersolvable = TriBool::unknown;
    std::string ss_certificate;
    TriBool free = TriBool::unknown;
    std::string free_certificate;
    std::string provenance;
    bool cross_checked = false;
};

Verdict decide(const SignedGraph& g);

std::string verdict_to_json(const Verdict& v);

}  // namespace sga
