#include "sga/signed_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace sga {

void SignedGraph::validate() const {
    auto check_edges = [&](const std::set<VertexPair>& es, const char* what) {
        for (const auto& [a, b] : es) {
            if (a >= b) throw std::invalid_argument(std::string(what) + ": pair not normalized");
            if (!vertices.count(a) || !vertices.count(b))
                throw std::invalid_argument(std::string(what) + ": endpoint not a vertex");
        }
    };
    check_edges(pos_edges, "pos_edges");
    check_edges(neg_edges, "neg_edges");
    for (Vertex v : loops)
        if (!vertices.count(v)) throw std::invalid_argument("loops: unknown vertex");
}

std::set<Vertex> SignedGraph::neighbors(Vertex v) const {
    std::set<Vertex> out;
    for (const auto& [a, b] : pos_edges) {
        if (a == v) out.insert(b);
        if (b == v) out.insert(a);
    }
    for (const auto& [a, b] : neg_edges) {
        if (a == v) out.insert(b);
        if (b == v) out.insert(a);
    }
    return out;
}

std::vector<SignedEdge> SignedGraph::signed_edges() const {
    std::vector<SignedEdge> out;
    for (const auto& [a, b] : pos_edges) out.push_back({a, b, Sign::positive});
    for (const auto& [a, b] : neg_edges) out.push_back({a, b, Sign::negative});
    for (Vertex v : loops) out.push_back({v, v, Sign::negative});
    std::sort(out.begin(), out.end());
    return out;
}

int SignedGraph::degree(Vertex v) const {
    int d = loops.count(v) ? 1 : 0;
    for (const auto& [a, b] : pos_edges)
        if (a == v || b == v) ++d;
    for (const auto& [a, b] : neg_edges)
        if (a == v || b == v) ++d;
    return d;
}

int SwitchingFunction::at(Vertex v) const {
    for (const auto& [u, s] : signs)
        if (u == v) return s;
    throw std::invalid_argument("switching function undefined at vertex");
}

SignedGraph complete_signed(const std::set<Vertex>& vs) {
    SignedGraph g;
    g.vertices = vs;
    g.loops = vs;
    for (auto it = vs.begin(); it != vs.end(); ++it)
        for (auto jt = std::next(it); jt != vs.end(); ++jt) {
            g.pos_edges.insert({*it, *jt});
            g.neg_edges.insert({*it, *jt});
        }
    return g;
}

SignedGraph induced_subgraph(const SignedGraph& g, const std::set<Vertex>& w) {
    for (Vertex v : w)
        if (!g.vertices.count(v)) throw std::invalid_argument("induced_subgraph: unknown vertex");
    SignedGraph out;
    out.vertices = w;
    for (const auto& [a, b] : g.pos_edges)
        if (w.count(a) && w.count(b)) out.pos_edges.insert({a, b});
    for (const auto& [a, b] : g.neg_edges)
        if (w.count(a) && w.count(b)) out.neg_edges.insert({a, b});
    for (Vertex v : g.loops)
        if (w.count(v)) out.loops.insert(v);
    return out;
}

SignedGraph apply_switching(const SignedGraph& g, const SwitchingFunction& nu) {
    std::set<Vertex> covered;
    for (const auto& [v, s] : nu.signs) {
        if (s != 1 && s != -1) throw std::invalid_argument("switching values must be +/-1");
        covered.insert(v);
    }
    if (covered != g.vertices) throw std::invalid_argument("switching domain mismatch");

    SignedGraph out;
    out.vertices = g.vertices;
    out.loops = g.loops;
    for (const auto& [a, b] : g.pos_edges)
        (nu.at(a) == nu.at(b) ? out.pos_edges : out.neg_edges).insert({a, b});
    for (const auto& [a, b] : g.neg_edges)
        (nu.at(a) == nu.at(b) ? out.neg_edges : out.pos_edges).insert({a, b});
    return out;
}

SignedGraph remove_vertex(const SignedGraph& g, Vertex v) {
    std::set<Vertex> w = g.vertices;
    w.erase(v);
    return induced_subgraph(g, w);
}

SignedGraph contract(const SignedGraph& g, const DirectedEdge& e) {
    VertexPair p = make_pair_norm(e.from, e.to);
    const auto& owner = e.sign == Sign::positive ? g.pos_edges : g.neg_edges;
    if (!owner.count(p)) throw std::invalid_argument("contract: edge not present");

    Vertex v = e.from, w = e.to;
    SignedGraph out = remove_vertex(g, v);
    bool loop_at_w = g.loops.count(v) != 0;
    if (e.sign == Sign::positive && g.has_neg(v, w)) loop_at_w = true;
    if (e.sign == Sign::negative && g.has_pos(v, w)) loop_at_w = true;
    if (loop_at_w) out.loops.insert(w);

    // reattach neighbors of v; signs swap under a negative contraction
    for (const auto& [a, b] : g.pos_edges) {
        Vertex u = a == v ? b : (b == v ? a : -1);
        if (u < 0 || u == w) continue;
        (e.sign == Sign::positive ? out.pos_edges : out.neg_edges).insert(make_pair_norm(u, w));
    }
    for (const auto& [a, b] : g.neg_edges) {
        Vertex u = a == v ? b : (b == v ? a : -1);
        if (u < 0 || u == w) continue;
        (e.sign == Sign::positive ? out.neg_edges : out.pos_edges).insert(make_pair_norm(u, w));
    }
    return out;
}

std::vector<Component> balanced_components(const SignedGraph& g) {
    std::vector<Component> out;
    std::set<Vertex> seen;
    for (Vertex root : g.vertices) {
        if (seen.count(root)) continue;
        // sign-consistent BFS labeling
        std::map<Vertex, int> label;
        label[root] = 1;
        std::queue<Vertex> q;
        q.push(root);
        bool balanced = true;
        std::set<Vertex> comp{root};
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex u : g.neighbors(v)) {
                int want_pos = g.has_pos(v, u) ? label[v] : 0;
                int want_neg = g.has_neg(v, u) ? -label[v] : 0;
                int want = want_pos ? want_pos : want_neg;
                if (want_pos && want_neg) balanced = false;  // +/- pair
                if (!label.count(u)) {
                    label[u] = want;
                    comp.insert(u);
                    q.push(u);
                } else {
                    if (want_pos && label[u] != want_pos) balanced = false;
                    if (want_neg && label[u] != want_neg) balanced = false;
                }
            }
        }
        for (Vertex v : comp)
            if (g.loops.count(v)) balanced = false;
        seen.insert(comp.begin(), comp.end());
        out.push_back({std::move(comp), balanced});
    }
    return out;
}

int rank(const SignedGraph& g) {
    int b = 0;
    for (const auto& c : balanced_components(g))
        if (c.balanced) ++b;
    return static_cast<int>(g.vertices.size()) - b;
}

bool is_connected(const SignedGraph& g) {
    return balanced_components(g).size() <= 1;
}

Balance cycle_balance(const SignedGraph& g, const Cycle& c) {
    const auto& vs = c.vertices;
    if (vs.empty()) throw std::invalid_argument("empty cycle");
    if (vs.size() == 1) {
        if (!g.loops.count(vs[0])) throw std::invalid_argument("1-cycle requires a loop");
        return Balance::unbalanced;
    }
    if (vs.size() == 2) {
        if (!(g.has_pos(vs[0], vs[1]) && g.has_neg(vs[0], vs[1])))
            throw std::invalid_argument("2-cycle requires a +/- pair");
        return Balance::unbalanced;
    }
    if (c.signs.size() != vs.size()) throw std::invalid_argument("cycle: one sign per edge required");
    std::set<Vertex> distinct(vs.begin(), vs.end());
    if (distinct.size() != vs.size()) throw std::invalid_argument("cycle: repeated vertex");
    int negs = 0;
    for (size_t i = 0; i < vs.size(); ++i) {
        Vertex a = vs[i], b = vs[(i + 1) % vs.size()];
        bool present = c.signs[i] == Sign::positive ? g.has_pos(a, b) : g.has_neg(a, b);
        if (!present) throw std::invalid_argument("cycle: chosen edge not in graph");
        if (c.signs[i] == Sign::negative) ++negs;
    }
    return negs % 2 == 0 ? Balance::balanced : Balance::unbalanced;
}

SignedGraph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
    }
    SignedGraph g;
    if (!j.is_object()) throw std::invalid_argument("graph JSON must be an object");
    for (const char* key : {"vertices", "positive", "negative", "loops"})
        if (!j.contains(key) || !j[key].is_array())
            throw std::invalid_argument(std::string("graph JSON needs array field \"") + key +
                                        "\"");
    for (const auto& v : j["vertices"]) g.vertices.insert(v.get<int>());
    auto read_pairs = [&](const char* key, std::set<VertexPair>& out) {
        for (const auto& p : j[key]) {
            if (!p.is_array() || p.size() != 2) throw std::invalid_argument("edge must be a pair");
            out.insert(make_pair_norm(p[0].get<int>(), p[1].get<int>()));
        }
    };
    read_pairs("positive", g.pos_edges);
    read_pairs("negative", g.neg_edges);
    for (const auto& v : j["loops"]) g.loops.insert(v.get<int>());
    g.validate();
    return g;
}

std::string graph_to_json(const SignedGraph& g) {
    // field order is part of the canonical format
    nlohmann::ordered_json j;
    j["vertices"] = g.vertices;
    auto pairs = [](const std::set<VertexPair>& es) {
        nlohmann::ordered_json a = nlohmann::ordered_json::array();
        for (const auto& [x, y] : es) a.push_back({x, y});
        return a;
    };
    j["positive"] = pairs(g.pos_edges);
    j["negative"] = pairs(g.neg_edges);
    j["loops"] = g.loops;
    return j.dump();
}

}  // namespace sga
