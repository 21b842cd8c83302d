#include "sga/decide.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "sga/arrangement.hpp"
#include "sga/freeness.hpp"
#include "sga/simple_graph.hpp"

namespace sga {

std::string tribool_str(TriBool t) {
    switch (t) {
        case TriBool::yes: return "yes";
        case TriBool::no: return "no";
        default: return "unknown";
    }
}

namespace {

std::string vertex_list(const std::vector<Vertex>& vs) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
    os << "]";
    return os.str();
}

bool is_d3(const SignedGraph& g) {
    if (g.vertices.size() != 3 || !g.loops.empty()) return false;
    std::vector<Vertex> vs(g.vertices.begin(), g.vertices.end());
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j)
            if (!g.has_pos(vs[i], vs[j]) || !g.has_neg(vs[i], vs[j])) return false;
    return true;
}

/// Loopless, all negative edges incident to one vertex whose negative
/// neighborhood is a positive clique, and the positive part is chordal.
bool is_one_cone(const SignedGraph& g, std::string& why) {
    if (!g.loops.empty()) return false;
    SimpleGraph pos{g.vertices, g.pos_edges};
    if (!is_chordal(pos)) return false;
    if (g.neg_edges.empty()) {
        why = "no negative edges, positive part chordal";
        return true;
    }
    for (Vertex v : g.vertices) {
        std::set<Vertex> nb;
        bool all_incident = true;
        for (const auto& [a, b] : g.neg_edges) {
            if (a == v)
                nb.insert(b);
            else if (b == v)
                nb.insert(a);
            else
                all_incident = false;
        }
        if (!all_incident) continue;
        if (!pos.is_clique(nb)) continue;
        std::ostringstream os;
        os << "negative edges form a star at vertex " << v
           << " with positive-clique neighborhood, positive part chordal";
        why = os.str();
        return true;
    }
    return false;
}

}  // namespace

SSDecision zaslavsky_ss_decide(const SignedGraph& g) {
    SSDecision d;
    if (auto seo = signed_elimination_ordering(g)) {
        d.value = TriBool::yes;
        d.how = "signed elimination ordering " + vertex_list(*seo);
        d.elimination_order = *seo;
        return d;
    }
    // the arrangement of a disconnected graph is a product over components,
    // and a product is supersolvable iff every factor is; peeling a signed
    // simplicial vertex never disconnects (its neighbors are pairwise
    // adjacent), so components only need splitting at the top
    auto comps = balanced_components(g);
    if (comps.size() > 1) {
        for (const Component& c : comps) {
            SSDecision inner = zaslavsky_ss_decide(induced_subgraph(g, c.vertices));
            if (inner.value != TriBool::yes) {
                d.value = TriBool::no;
                d.how = "connected component on " +
                        vertex_list({c.vertices.begin(), c.vertices.end()}) +
                        " is not supersolvable: " + inner.how;
                return d;
            }
        }
        d.value = TriBool::yes;
        d.how = "every connected component is supersolvable";
        return d;
    }
    PeelResult peel = peel_simplicial_extension(g);
    d.peeled = peel.peeled;
    if (is_d3(peel.base)) {
        d.value = TriBool::yes;
        d.how = "simplicial extension (peel " + vertex_list(peel.peeled) +
                ") of the doubled triangle";
        return d;
    }
    std::string why;
    if (is_one_cone(peel.base, why)) {
        d.value = TriBool::yes;
        d.how = "simplicial extension (peel " + vertex_list(peel.peeled) + ") of a base where " +
                why;
        return d;
    }
    d.value = TriBool::no;
    d.how = "no signed elimination ordering; the simplicial-peel base (on " +
            std::to_string(peel.base.vertices.size()) +
            " vertices) is neither the doubled triangle nor a chordal one-vertex cone";
    return d;
}

ERDecision er_decide(const SignedGraph& g) {
    ERDecision d;
    SimpleGraph pos{g.vertices, g.pos_edges};
    if (!pos.is_complete()) {
        d.reason = "positive part is not complete";
        return d;
    }
    d.applicable = true;
    SimpleGraph neg{g.vertices, g.neg_edges};
    ThresholdCertificate tc = is_threshold(neg);
    if (!tc.threshold) {
        d.free = false;
        d.reason = "negative part is not threshold: induced " + tc.witness_kind + " on " +
                   vertex_list(tc.witness_vertices);
        return d;
    }
    if (!degree_orderings_initial_segment(neg, g.loops)) {
        int min_in = -1, max_out = -1;
        for (Vertex v : g.vertices) {
            int deg = neg.degree(v);
            if (g.loops.count(v))
                min_in = min_in < 0 ? deg : std::min(min_in, deg);
            else
                max_out = std::max(max_out, deg);
        }
        std::ostringstream os;
        os << "loops are not a top segment of the negative degree ordering: "
           << "minimum looped degree " << min_in << " < maximum unlooped degree " << max_out;
        d.free = false;
        d.reason = os.str();
        return d;
    }
    d.free = true;
    d.reason = "negative part is threshold and loops form a top segment of its degree ordering";
    return d;
}

MainTheoremDecision main_theorem_decide(const SignedGraph& g) {
    MainTheoremDecision d;
    for (const auto& e : g.neg_edges)
        if (!g.pos_edges.count(e)) {
            d.reason = "some negative edge has no positive twin";
            return d;
        }
    d.applicable = true;
    bool bc = !is_balanced_chordal(g).has_value();
    if (!bc) {
        d.free = TriBool::no;
        d.reason = "not balanced chordal";
        return d;
    }
    if (g.loops == g.vertices) {
        d.free = TriBool::yes;
        d.reason = "balanced chordal with loops at every vertex";
        return d;
    }
    d.free = TriBool::unknown;
    d.reason = "balanced chordal with partial loops: freeness not determined by this criterion";
    return d;
}

std::optional<FrameCircuit> frame_circuit_refute(const SignedGraph& g) {
    for (const FrameCircuit& fc : find_frame_circuits(g, 8)) {
        if (fc.support.size() < 4) continue;
        if (!is_flat_subgraph(g, fc.support)) continue;
        // localization: the sub-arrangement on the circuit's edges
        SignedGraph sub;
        sub.vertices = g.vertices;
        for (const auto& e : fc.support) {
            if (e.u == e.v)
                sub.loops.insert(e.u);
            else
                (e.sign == Sign::positive ? sub.pos_edges : sub.neg_edges).insert({e.u, e.v});
        }
        if (sub.vertices.size() > 5 || sub.num_hyperplanes() > 16) continue;
        if (freeness_decide(realize(sub)).status == FreenessStatus::non_free) return fc;
    }
    return std::nullopt;
}

namespace {

std::string circuit_json(const FrameCircuit& fc) {
    nlohmann::json j;
    switch (fc.kind) {
        case FrameCircuitShape::balanced_cycle: j["kind"] = "balanced_cycle"; break;
        case FrameCircuitShape::loose_handcuff: j["kind"] = "loose_handcuff"; break;
        case FrameCircuitShape::tight_handcuff: j["kind"] = "tight_handcuff"; break;
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : fc.support) {
        nlohmann::json je;
        je["u"] = e.u;
        je["v"] = e.v;
        je["sign"] = e.u == e.v ? "loop" : (e.sign == Sign::positive ? "+" : "-");
        edges.push_back(je);
    }
    j["edges"] = edges;
    return j.dump();
}

}  // namespace

Verdict decide(const SignedGraph& g) {
    g.validate();
    Verdict v;
    v.bc_witness = is_balanced_chordal(g);
    v.balanced_chordal = !v.bc_witness.has_value();

    SSDecision ss = zaslavsky_ss_decide(g);
    v.supersolvable = ss.value;
    v.ss_certificate = ss.how;

    if (ss.value == TriBool::yes) {
        v.free = TriBool::yes;
        v.free_certificate = "supersolvable: " + ss.how;
        v.provenance = "Supersolvable";
        return v;
    }
    if (!v.balanced_chordal) {
        v.free = TriBool::no;
        std::ostringstream os;
        os << "balanced cycle " << vertex_list(v.bc_witness->cycle.vertices)
           << " of length " << v.bc_witness->cycle.vertices.size() << " has no balanced chord";
        v.free_certificate = os.str();
        v.provenance = "BalancedChordObstruction";
        return v;
    }
    ERDecision er = er_decide(g);
    if (er.applicable) {
        v.free = er.free ? TriBool::yes : TriBool::no;
        v.free_certificate = er.reason;
        v.provenance = "CompletePositivePart";
        return v;
    }
    MainTheoremDecision mt = main_theorem_decide(g);
    if (mt.applicable && mt.free != TriBool::unknown) {
        v.free = mt.free;
        v.free_certificate = mt.reason;
        v.provenance = "DoubledNegativeEdges";
        return v;
    }
    PeelResult peel = peel_simplicial_extension(g);
    if (!peel.peeled.empty() && !peel.base.vertices.empty()) {
        Verdict inner = decide(peel.base);
        if (inner.free != TriBool::unknown) {
            v.free = inner.free;
            v.free_certificate = "after peeling signed-simplicial vertices " +
                                 vertex_list(peel.peeled) + ": " + inner.free_certificate;
            v.provenance = "SimplicialPeel+" + inner.provenance;
            return v;
        }
    }
    if (auto fc = frame_circuit_refute(g)) {
        v.free = TriBool::no;
        v.free_certificate = "non-free localization at flat frame circuit " + circuit_json(*fc);
        v.provenance = "FrameCircuitFlat";
        return v;
    }
    if (g.vertices.size() <= 5 && g.num_hyperplanes() <= 16) {
        FreenessResult fr = freeness_decide(realize(g));
        if (fr.status != FreenessStatus::out_of_range) {
            v.free = fr.status == FreenessStatus::is_free ? TriBool::yes : TriBool::no;
            v.free_certificate = fr.detail;
            v.provenance = "DerivationModule";
            return v;
        }
    }
    v.free = TriBool::unknown;
    v.free_certificate = "no applicable criterion";
    v.provenance = "Unknown";
    return v;
}

std::string verdict_to_json(const Verdict& v) {
    nlohmann::json j;
    j["balanced_chordal"] = v.balanced_chordal;
    if (v.bc_witness) {
        nlohmann::json w;
        w["cycle"] = v.bc_witness->cycle.vertices;
        nlohmann::json signs = nlohmann::json::array();
        for (Sign s : v.bc_witness->cycle.signs) signs.push_back(s == Sign::positive ? "+" : "-");
        w["signs"] = signs;
        nlohmann::json chords = nlohmann::json::array();
        for (const auto& cr : v.bc_witness->checked_chords) {
            nlohmann::json c;
            c["u"] = cr.chord.u;
            c["v"] = cr.chord.v;
            c["sign"] = cr.chord.sign == Sign::positive ? "+" : "-";
            c["reason"] = cr.reason;
            chords.push_back(c);
        }
        w["refuted_chords"] = chords;
        j["witness"] = w;
    }
    j["supersolvable"] = tribool_str(v.supersolvable);
    j["supersolvable_certificate"] = v.ss_certificate;
    j["free"] = tribool_str(v.free);
    j["free_certificate"] = v.free_certificate;
    j["provenance"] = v.provenance;
    j["cross_checked"] = v.cross_checked;
    return j.dump(2);
}

}  // namespace sga
