#include "sga/simple_graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace sga {

void SimpleGraph::validate() const {
    for (const auto& [a, b] : edges) {
        if (a >= b) throw std::invalid_argument("edge pair not normalized");
        if (!vertices.count(a) || !vertices.count(b))
            throw std::invalid_argument("edge endpoint not a vertex");
    }
}

std::set<Vertex> SimpleGraph::neighbors(Vertex v) const {
    std::set<Vertex> out;
    for (const auto& [a, b] : edges) {
        if (a == v) out.insert(b);
        if (b == v) out.insert(a);
    }
    return out;
}

SimpleGraph SimpleGraph::induced(const std::set<Vertex>& w) const {
    SimpleGraph out;
    out.vertices = w;
    for (const auto& [a, b] : edges)
        if (w.count(a) && w.count(b)) out.edges.insert({a, b});
    return out;
}

bool SimpleGraph::is_clique(const std::set<Vertex>& c) const {
    for (auto it = c.begin(); it != c.end(); ++it)
        for (auto jt = std::next(it); jt != c.end(); ++jt)
            if (!adjacent(*it, *jt)) return false;
    return true;
}

bool SimpleGraph::is_complete() const { return is_clique(vertices); }

namespace {

std::vector<std::set<Vertex>> components_of(const SimpleGraph& g) {
    std::vector<std::set<Vertex>> out;
    std::set<Vertex> seen;
    for (Vertex root : g.vertices) {
        if (seen.count(root)) continue;
        std::set<Vertex> comp;
        std::queue<Vertex> q;
        q.push(root);
        comp.insert(root);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex u : g.neighbors(v))
                if (comp.insert(u).second) q.push(u);
        }
        seen.insert(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool simplicial_in(const SimpleGraph& g, Vertex v) {
    return g.is_clique(g.neighbors(v));
}

// Every chordless >=4-cycle is an induced subgraph that is itself a cycle;
// desk scale allows scanning vertex subsets.
std::optional<ChordlessCycle> find_chordless_cycle(const SimpleGraph& g) {
    std::vector<Vertex> vs(g.vertices.begin(), g.vertices.end());
    size_t n = vs.size();
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) < 4) continue;
        std::set<Vertex> w;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) w.insert(vs[i]);
        SimpleGraph h = g.induced(w);
        bool cyc = h.edges.size() == w.size();
        for (Vertex v : w)
            if (cyc && h.degree(v) != 2) cyc = false;
        if (!cyc || components_of(h).size() != 1) continue;
        // walk the cycle
        ChordlessCycle order;
        Vertex start = *w.begin(), prev = -1, cur = start;
        do {
            order.push_back(cur);
            auto nb = h.neighbors(cur);
            Vertex next = -1;
            for (Vertex u : nb)
                if (u != prev) next = u;
            prev = cur;
            cur = next;
        } while (cur != start);
        return order;
    }
    return std::nullopt;
}

}  // namespace

PeoResult perfect_elimination_ordering(const SimpleGraph& g) {
    std::vector<Vertex> order;  // filled back to front
    SimpleGraph cur = g;
    while (!cur.vertices.empty()) {
        Vertex pick = -1;
        for (Vertex v : cur.vertices)
            if (simplicial_in(cur, v)) {
                pick = v;
                break;
            }
        if (pick < 0) {
            auto cyc = find_chordless_cycle(cur);
            if (!cyc) throw std::logic_error("no simplicial vertex but no chordless cycle");
            return {std::nullopt, *cyc};
        }
        order.push_back(pick);
        cur = cur.induced([&] {
            auto w = cur.vertices;
            w.erase(pick);
            return w;
        }());
    }
    std::reverse(order.begin(), order.end());
    return {std::move(order), {}};
}

bool is_chordal(const SimpleGraph& g) {
    return perfect_elimination_ordering(g).order.has_value();
}

std::set<std::set<Vertex>> minimal_vertex_separators(const SimpleGraph& g) {
    // S is a minimal (a,b)-separator for some pair iff G\S has at least two
    // components whose neighborhood is exactly S.
    std::set<std::set<Vertex>> out;
    std::vector<Vertex> vs(g.vertices.begin(), g.vertices.end());
    size_t n = vs.size();
    if (n > 25) throw std::invalid_argument("minimal_vertex_separators: graph too large");
    for (uint32_t mask = 0; mask + 1 < (1u << n); ++mask) {
        std::set<Vertex> s;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) s.insert(vs[i]);
        if (s.empty() || s.size() == n) continue;
        std::set<Vertex> rest;
        std::set_difference(g.vertices.begin(), g.vertices.end(), s.begin(), s.end(),
                            std::inserter(rest, rest.begin()));
        int full = 0;
        for (const auto& comp : components_of(g.induced(rest))) {
            std::set<Vertex> nb;
            for (Vertex v : comp)
                for (Vertex u : g.neighbors(v))
                    if (!comp.count(u)) nb.insert(u);
            if (nb == s) ++full;
        }
        if (full >= 2) out.insert(std::move(s));
    }
    return out;
}

std::vector<std::set<Vertex>> maximal_cliques(const SimpleGraph& g) {
    std::vector<std::set<Vertex>> out;
    std::vector<Vertex> vs(g.vertices.begin(), g.vertices.end());
    size_t n = vs.size();
    if (n > 25) throw std::invalid_argument("maximal_cliques: graph too large");
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::set<Vertex> c;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) c.insert(vs[i]);
        if (!g.is_clique(c)) continue;
        bool maximal = true;
        for (Vertex v : g.vertices) {
            if (c.count(v)) continue;
            bool all = true;
            for (Vertex u : c)
                if (!g.adjacent(u, v)) all = false;
            if (all) maximal = false;
        }
        if (maximal) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

CliqueSeparatorGraph build_csg(const SimpleGraph& g) {
    auto peo = perfect_elimination_ordering(g);
    if (!peo.order) {
        std::ostringstream os;
        os << "build_csg: graph not chordal; chordless cycle:";
        for (Vertex v : peo.chordless) os << ' ' << v;
        throw std::invalid_argument(os.str());
    }

    CliqueSeparatorGraph csg;
    csg.clique_nodes = maximal_cliques(g);
    auto seps = minimal_vertex_separators(g);
    csg.separator_nodes.assign(seps.begin(), seps.end());

    auto strict_subset = [](const std::set<Vertex>& a, const std::set<Vertex>& b) {
        return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    int nc = csg.num_cliques(), ns = static_cast<int>(csg.separator_nodes.size());
    for (int s = 0; s < ns; ++s) {
        for (int c = 0; c < nc; ++c) {
            if (!strict_subset(csg.separator_nodes[s], csg.clique_nodes[c])) continue;
            bool blocked = false;
            for (int s2 = 0; s2 < ns && !blocked; ++s2)
                if (strict_subset(csg.separator_nodes[s], csg.separator_nodes[s2]) &&
                    strict_subset(csg.separator_nodes[s2], csg.clique_nodes[c]))
                    blocked = true;
            if (!blocked) csg.cs_edges.insert({c, s});
        }
        for (int s2 = 0; s2 < ns; ++s2) {
            if (!strict_subset(csg.separator_nodes[s], csg.separator_nodes[s2])) continue;
            bool blocked = false;
            for (int s3 = 0; s3 < ns && !blocked; ++s3)
                if (strict_subset(csg.separator_nodes[s], csg.separator_nodes[s3]) &&
                    strict_subset(csg.separator_nodes[s3], csg.separator_nodes[s2]))
                    blocked = true;
            if (!blocked) csg.arcs.insert({s, s2});
        }
    }

    // boxes: components after deleting arcs (cs_edges only)
    int total = nc + ns;
    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& [c, s] : csg.cs_edges) parent[find(c)] = find(nc + s);
    std::map<int, int> box_of_root;
    for (int id = 0; id < total; ++id) {
        int r = find(id);
        if (!box_of_root.count(r)) {
            box_of_root[r] = static_cast<int>(csg.boxes.size());
            csg.boxes.emplace_back();
        }
        csg.boxes[box_of_root[r]].push_back(id);
    }
    std::set<int> has_outgoing;
    for (const auto& [s, s2] : csg.arcs) {
        int from = box_of_root[find(nc + s)], to = box_of_root[find(nc + s2)];
        if (from != to) has_outgoing.insert(from);
    }
    for (int b = 0; b < static_cast<int>(csg.boxes.size()); ++b)
        if (!has_outgoing.count(b)) csg.sink_boxes.push_back(b);
    return csg;
}

std::string csg_to_dot(const CliqueSeparatorGraph& csg) {
    auto label = [](const std::set<Vertex>& s) {
        std::ostringstream os;
        bool first = true;
        for (Vertex v : s) {
            if (!first) os << ' ';
            os << v;
            first = false;
        }
        return os.str();
    };
    std::ostringstream os;
    os << "digraph csg {\n";
    int nc = csg.num_cliques();
    for (int c = 0; c < nc; ++c)
        os << "  C" << c << " [shape=box,label=\"" << label(csg.clique_nodes[c]) << "\"];\n";
    for (size_t s = 0; s < csg.separator_nodes.size(); ++s)
        os << "  S" << s << " [shape=ellipse,label=\"" << label(csg.separator_nodes[s]) << "\"];\n";
    for (const auto& [c, s] : csg.cs_edges)
        os << "  C" << c << " -> S" << s << " [dir=none];\n";
    for (const auto& [s, s2] : csg.arcs) os << "  S" << s << " -> S" << s2 << ";\n";
    os << "}\n";
    return os.str();
}

ThresholdCertificate is_threshold(const SimpleGraph& g) {
    ThresholdCertificate cert;
    std::vector<std::pair<Vertex, ThresholdStep>> removed;
    SimpleGraph cur = g;
    while (!cur.vertices.empty()) {
        Vertex pick = -1;
        ThresholdStep step{};
        for (Vertex v : cur.vertices) {
            int d = cur.degree(v);
            if (d == 0) {
                pick = v;
                step = ThresholdStep::isolated;
                break;
            }
            if (d == static_cast<int>(cur.vertices.size()) - 1) {
                pick = v;
                step = ThresholdStep::dominating;
                break;
            }
        }
        if (pick < 0) break;
        removed.push_back({pick, step});
        auto w = cur.vertices;
        w.erase(pick);
        cur = cur.induced(w);
    }
    if (cur.vertices.empty()) {
        cert.threshold = true;
        cert.build_sequence.assign(removed.rbegin(), removed.rend());
        if (!cert.build_sequence.empty()) cert.build_sequence[0].second = ThresholdStep::isolated;
        return cert;
    }
    // stuck: a forbidden induced subgraph exists among 4-subsets
    cert.threshold = false;
    std::vector<Vertex> vs(cur.vertices.begin(), cur.vertices.end());
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            for (size_t k = j + 1; k < vs.size(); ++k)
                for (size_t l = k + 1; l < vs.size(); ++l) {
                    std::set<Vertex> w{vs[i], vs[j], vs[k], vs[l]};
                    SimpleGraph h = cur.induced(w);
                    std::vector<int> degs;
                    for (Vertex v : w) degs.push_back(h.degree(v));
                    std::sort(degs.begin(), degs.end());
                    std::string kind;
                    if (degs == std::vector<int>{1, 1, 1, 1})
                        kind = "2K2";
                    else if (degs == std::vector<int>{2, 2, 2, 2} && h.edges.size() == 4)
                        kind = "C4";
                    else if (degs == std::vector<int>{1, 1, 2, 2} && h.edges.size() == 3 &&
                             components_of(h).size() == 1)
                        kind = "P4";
                    if (!kind.empty()) {
                        cert.witness_vertices.assign(w.begin(), w.end());
                        cert.witness_kind = kind;
                        return cert;
                    }
                }
    throw std::logic_error("threshold peel stuck but no forbidden subgraph found");
}

bool degree_orderings_initial_segment(const SimpleGraph& g, const std::set<Vertex>& l) {
    for (Vertex v : l)
        if (!g.vertices.count(v)) throw std::invalid_argument("initial segment: unknown vertex");
    if (l.empty() || l == g.vertices) return true;
    int min_in = INT32_MAX, max_out = -1;
    for (Vertex v : g.vertices) {
        int d = g.degree(v);
        if (l.count(v))
            min_in = std::min(min_in, d);
        else
            max_out = std::max(max_out, d);
    }
    return min_in >= max_out;
}

}  // namespace sga
