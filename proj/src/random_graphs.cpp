#include "sga/random_graphs.hpp"

#include <algorithm>
#include <stdexcept>

namespace sga {

namespace {

std::vector<VertexPair> all_pairs(int n) {
    std::vector<VertexPair> ps;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) ps.push_back({i, j});
    return ps;
}

SignedGraph base_graph(int n) {
    SignedGraph g;
    for (int i = 1; i <= n; ++i) g.vertices.insert(i);
    return g;
}

}  // namespace

SignedGraph random_signed_graph(int n, std::mt19937_64& rng, EdgeClass cls, LoopPolicy loops) {
    SignedGraph g = base_graph(n);
    int states = cls == EdgeClass::general ? 4 : 3;
    std::uniform_int_distribution<int> pick(0, states - 1);
    for (const auto& p : all_pairs(n)) {
        int s = pick(rng);
        if (cls == EdgeClass::general) {
            if (s == 1 || s == 3) g.pos_edges.insert(p);
            if (s == 2 || s == 3) g.neg_edges.insert(p);
        } else {
            if (s >= 1) g.pos_edges.insert(p);
            if (s == 2) g.neg_edges.insert(p);
        }
    }
    switch (loops) {
        case LoopPolicy::none: break;
        case LoopPolicy::full: g.loops = g.vertices; break;
        case LoopPolicy::random_pick: {
            std::uniform_int_distribution<int> coin(0, 1);
            for (int v = 1; v <= n; ++v)
                if (coin(rng)) g.loops.insert(v);
            break;
        }
    }
    return g;
}

std::vector<SignedGraph> all_doubled_full_loops(int n) {
    auto ps = all_pairs(n);
    size_t total = 1;
    for (size_t i = 0; i < ps.size(); ++i) total *= 3;
    std::vector<SignedGraph> out;
    out.reserve(total);
    for (size_t code = 0; code < total; ++code) {
        SignedGraph g = base_graph(n);
        g.loops = g.vertices;
        size_t c = code;
        for (const auto& p : ps) {
            int s = static_cast<int>(c % 3);
            c /= 3;
            if (s >= 1) g.pos_edges.insert(p);
            if (s == 2) g.neg_edges.insert(p);
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<SignedGraph> all_signed_graphs(int n) {
    auto ps = all_pairs(n);
    if (ps.size() * 2 + n > 20) throw std::invalid_argument("all_signed_graphs: too large");
    size_t pair_total = 1;
    for (size_t i = 0; i < ps.size(); ++i) pair_total *= 4;
    size_t loop_total = size_t(1) << n;
    std::vector<SignedGraph> out;
    out.reserve(pair_total * loop_total);
    for (size_t code = 0; code < pair_total; ++code) {
        SignedGraph g = base_graph(n);
        size_t c = code;
        for (const auto& p : ps) {
            int s = static_cast<int>(c % 4);
            c /= 4;
            if (s == 1 || s == 3) g.pos_edges.insert(p);
            if (s == 2 || s == 3) g.neg_edges.insert(p);
        }
        for (size_t lm = 0; lm < loop_total; ++lm) {
            SignedGraph h = g;
            for (int v = 1; v <= n; ++v)
                if (lm & (size_t(1) << (v - 1))) h.loops.insert(v);
            out.push_back(std::move(h));
        }
    }
    return out;
}

std::vector<SignedGraph> all_complete_positive(int n) {
    auto ps = all_pairs(n);
    if (ps.size() + n > 20) throw std::invalid_argument("all_complete_positive: too large");
    size_t edge_total = size_t(1) << ps.size();
    size_t loop_total = size_t(1) << n;
    std::vector<SignedGraph> out;
    out.reserve(edge_total * loop_total);
    for (size_t em = 0; em < edge_total; ++em) {
        SignedGraph g = base_graph(n);
        for (const auto& p : ps) g.pos_edges.insert(p);
        for (size_t i = 0; i < ps.size(); ++i)
            if (em & (size_t(1) << i)) g.neg_edges.insert(ps[i]);
        for (size_t lm = 0; lm < loop_total; ++lm) {
            SignedGraph h = g;
            for (int v = 1; v <= n; ++v)
                if (lm & (size_t(1) << (v - 1))) h.loops.insert(v);
            out.push_back(std::move(h));
        }
    }
    return out;
}

SimpleGraph random_chordal(int n, std::mt19937_64& rng) {
    SimpleGraph g;
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<Vertex> order;
    for (int v = 1; v <= n; ++v) {
        // attach v to a clique grown greedily over a shuffled prefix
        std::vector<Vertex> shuffled = order;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        std::set<Vertex> clique;
        for (Vertex u : shuffled) {
            bool ok = true;
            for (Vertex w : clique)
                if (!g.adjacent(u, w)) ok = false;
            if (!ok) continue;
            if (coin(rng)) continue;  // leave some cliques small
            clique.insert(u);
        }
        g.vertices.insert(v);
        for (Vertex u : clique) g.edges.insert(make_pair_norm(u, v));
        order.push_back(v);
    }
    return g;
}

}  // namespace sga
