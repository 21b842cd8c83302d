#include "sga/signed_struct.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

#include "sga/coloring.hpp"
#include "sga/intpoly.hpp"

namespace sga {

bool is_signed_simplicial(const SignedGraph& g, Vertex v) {
    if (!g.vertices.count(v)) throw std::invalid_argument("is_signed_simplicial: unknown vertex");
    std::vector<Vertex> pos_nb, neg_nb;
    for (Vertex u : g.neighbors(v)) {
        if (g.has_pos(u, v)) pos_nb.push_back(u);
        if (g.has_neg(u, v)) neg_nb.push_back(u);
    }
    // (1) same-sign neighbor pairs must share a positive edge
    for (const auto& nb : {pos_nb, neg_nb})
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                if (!g.has_pos(nb[i], nb[j])) return false;
    // (2) opposite-sign neighbor pairs must share a negative edge
    for (Vertex u1 : pos_nb)
        for (Vertex u2 : neg_nb)
            if (u1 != u2 && !g.has_neg(u1, u2)) return false;
    // (3) loop propagation
    for (Vertex u : g.neighbors(v)) {
        bool doubled = g.has_pos(u, v) && g.has_neg(u, v);
        if ((g.loops.count(v) || doubled) && !g.loops.count(u)) return false;
    }
    return true;
}

namespace {

struct SeoSearch {
    std::vector<Vertex> vs;
    const SignedGraph* g;
    std::set<uint32_t> dead;

    bool solve(uint32_t mask, std::vector<Vertex>& order) {
        if (mask == 0) return true;
        if (dead.count(mask)) return false;
        std::set<Vertex> w;
        for (size_t i = 0; i < vs.size(); ++i)
            if (mask & (1u << i)) w.insert(vs[i]);
        SignedGraph sub = induced_subgraph(*g, w);
        for (size_t i = 0; i < vs.size(); ++i) {
            if (!(mask & (1u << i))) continue;
            if (!is_signed_simplicial(sub, vs[i])) continue;
            if (solve(mask & ~(1u << i), order)) {
                order.push_back(vs[i]);
                return true;
            }
        }
        dead.insert(mask);
        return false;
    }
};

}  // namespace

std::optional<std::vector<Vertex>> signed_elimination_ordering(const SignedGraph& g) {
    if (g.vertices.size() > 30) throw std::invalid_argument("signed_elimination_ordering: too large");
    SeoSearch s;
    s.vs.assign(g.vertices.begin(), g.vertices.end());
    s.g = &g;
    std::vector<Vertex> order;
    uint32_t full = s.vs.size() == 32 ? ~0u : ((1u << s.vs.size()) - 1);
    if (!s.solve(full, order)) return std::nullopt;
    return order;  // built from the last eliminated vertex backwards, so already v1..vl
}

std::vector<Cycle> enumerate_cycles(const SignedGraph& g, int min_len) {
    std::vector<Cycle> out;
    std::vector<Vertex> vs(g.vertices.begin(), g.vertices.end());
    std::vector<Vertex> path;
    std::set<Vertex> on_path;

    // vertex sequences: start at the minimum vertex, second < last (reflection)
    std::function<void(Vertex)> dfs = [&](Vertex start) {
        Vertex cur = path.back();
        for (Vertex next : g.neighbors(cur)) {
            if (next == start && static_cast<int>(path.size()) >= std::max(3, min_len) &&
                path[1] < path.back()) {
                // emit every sign assignment
                size_t k = path.size();
                std::vector<std::pair<bool, bool>> avail(k);
                for (size_t i = 0; i < k; ++i) {
                    Vertex a = path[i], b = path[(i + 1) % k];
                    avail[i] = {g.has_pos(a, b), g.has_neg(a, b)};
                }
                std::vector<Sign> signs(k, Sign::positive);
                std::function<void(size_t)> assign = [&](size_t i) {
                    if (i == k) {
                        out.push_back({path, signs});
                        return;
                    }
                    if (avail[i].first) {
                        signs[i] = Sign::positive;
                        assign(i + 1);
                    }
                    if (avail[i].second) {
                        signs[i] = Sign::negative;
                        assign(i + 1);
                    }
                };
                assign(0);
            }
            if (next <= start || on_path.count(next)) continue;
            path.push_back(next);
            on_path.insert(next);
            dfs(start);
            on_path.erase(next);
            path.pop_back();
        }
    };
    for (Vertex v : vs) {
        path = {v};
        on_path = {v};
        dfs(v);
    }
    return out;
}

namespace {

int neg_count(const std::vector<Sign>& signs, size_t from, size_t to_excl, size_t k) {
    int c = 0;
    for (size_t i = from; i != to_excl; i = (i + 1) % k)
        if (signs[i] == Sign::negative) ++c;
    return c;
}

}  // namespace

std::optional<BalancedCycleWitness> is_balanced_chordal(const SignedGraph& g) {
    for (const Cycle& c : enumerate_cycles(g, 4)) {
        size_t k = c.vertices.size();
        int total_neg = 0;
        for (Sign s : c.signs)
            if (s == Sign::negative) ++total_neg;
        if (total_neg % 2 != 0) continue;  // only balanced cycles need chords

        bool found_chord = false;
        std::vector<ChordRefutation> refutations;
        for (size_t i = 0; i < k && !found_chord; ++i) {
            for (size_t j = i + 2; j < k && !found_chord; ++j) {
                if (i == 0 && j == k - 1) continue;  // consecutive
                Vertex a = c.vertices[i], b = c.vertices[j];
                for (Sign s : {Sign::positive, Sign::negative}) {
                    bool present = s == Sign::positive ? g.has_pos(a, b) : g.has_neg(a, b);
                    if (!present) continue;
                    // sub-cycle i..j plus chord; the other side has the complementary parity
                    int n1 = neg_count(c.signs, i, j, k) + (s == Sign::negative ? 1 : 0);
                    if (n1 % 2 == 0) {
                        found_chord = true;
                        break;
                    }
                    std::ostringstream os;
                    os << "chord {" << a << "," << b << "} ("
                       << (s == Sign::positive ? "positive" : "negative")
                       << ") splits off an unbalanced sub-cycle";
                    refutations.push_back({{std::min(a, b), std::max(a, b), s}, os.str()});
                }
            }
        }
        if (!found_chord) return BalancedCycleWitness{c, std::move(refutations)};
    }
    return std::nullopt;
}

namespace {

struct UnbalancedCycle {
    std::set<Vertex> vertices;
    std::set<SignedEdge> edges;
};

std::vector<UnbalancedCycle> unbalanced_cycles(const SignedGraph& g) {
    std::vector<UnbalancedCycle> out;
    for (Vertex v : g.loops) out.push_back({{v}, {{v, v, Sign::negative}}});
    for (const auto& p : g.pos_edges)
        if (g.neg_edges.count(p))
            out.push_back({{p.first, p.second},
                           {{p.first, p.second, Sign::positive}, {p.first, p.second, Sign::negative}}});
    for (const Cycle& c : enumerate_cycles(g, 3)) {
        int neg = 0;
        for (Sign s : c.signs)
            if (s == Sign::negative) ++neg;
        if (neg % 2 == 0) continue;
        UnbalancedCycle uc;
        uc.vertices.insert(c.vertices.begin(), c.vertices.end());
        size_t k = c.vertices.size();
        for (size_t i = 0; i < k; ++i) {
            Vertex a = c.vertices[i], b = c.vertices[(i + 1) % k];
            uc.edges.insert({std::min(a, b), std::max(a, b), c.signs[i]});
        }
        out.push_back(std::move(uc));
    }
    return out;
}

bool disjoint(const std::set<Vertex>& a, const std::set<Vertex>& b) {
    for (Vertex v : a)
        if (b.count(v)) return false;
    return true;
}

}  // namespace

std::vector<FrameCircuit> find_frame_circuits(const SignedGraph& g, int max_edges) {
    std::set<std::pair<FrameCircuitShape, std::set<SignedEdge>>> seen;
    std::vector<FrameCircuit> out;
    auto emit = [&](FrameCircuitShape kind, std::set<SignedEdge> support) {
        if (static_cast<int>(support.size()) > max_edges) return;
        if (seen.insert({kind, support}).second) out.push_back({kind, std::move(support)});
    };

    for (const Cycle& c : enumerate_cycles(g, 3)) {
        int neg = 0;
        for (Sign s : c.signs)
            if (s == Sign::negative) ++neg;
        if (neg % 2 != 0) continue;
        std::set<SignedEdge> support;
        size_t k = c.vertices.size();
        for (size_t i = 0; i < k; ++i) {
            Vertex a = c.vertices[i], b = c.vertices[(i + 1) % k];
            support.insert({std::min(a, b), std::max(a, b), c.signs[i]});
        }
        emit(FrameCircuitShape::balanced_cycle, std::move(support));
    }

    auto ucs = unbalanced_cycles(g);
    for (size_t i = 0; i < ucs.size(); ++i) {
        for (size_t j = i + 1; j < ucs.size(); ++j) {
            const auto& c1 = ucs[i];
            const auto& c2 = ucs[j];
            std::set<Vertex> common;
            std::set_intersection(c1.vertices.begin(), c1.vertices.end(), c2.vertices.begin(),
                                  c2.vertices.end(), std::inserter(common, common.begin()));
            if (common.size() == 1) {
                // tight handcuff: edge-disjoint cycles sharing one vertex
                bool edge_disjoint = true;
                for (const auto& e : c1.edges)
                    if (c2.edges.count(e)) edge_disjoint = false;
                if (!edge_disjoint) continue;
                std::set<SignedEdge> support = c1.edges;
                support.insert(c2.edges.begin(), c2.edges.end());
                emit(FrameCircuitShape::tight_handcuff, std::move(support));
            } else if (common.empty()) {
                // loose handcuff: connect by a simple path with interior off both cycles
                std::set<Vertex> blocked = c1.vertices;
                blocked.insert(c2.vertices.begin(), c2.vertices.end());
                for (Vertex u : c1.vertices) {
                    std::vector<Vertex> path{u};
                    std::set<Vertex> on_path{u};
                    std::function<void()> dfs = [&]() {
                        Vertex cur = path.back();
                        for (Vertex next : g.neighbors(cur)) {
                            if (c2.vertices.count(next)) {
                                // complete path u .. cur, next; signs free per edge
                                std::vector<std::pair<Vertex, Vertex>> pedges;
                                for (size_t t = 0; t + 1 < path.size(); ++t)
                                    pedges.push_back({path[t], path[t + 1]});
                                pedges.push_back({cur, next});
                                std::vector<Sign> signs(pedges.size());
                                std::function<void(size_t)> assign = [&](size_t t) {
                                    if (t == pedges.size()) {
                                        std::set<SignedEdge> support = c1.edges;
                                        support.insert(c2.edges.begin(), c2.edges.end());
                                        for (size_t q = 0; q < pedges.size(); ++q) {
                                            auto [a, b] = pedges[q];
                                            support.insert(
                                                {std::min(a, b), std::max(a, b), signs[q]});
                                        }
                                        emit(FrameCircuitShape::loose_handcuff, std::move(support));
                                        return;
                                    }
                                    auto [a, b] = pedges[t];
                                    if (g.has_pos(a, b)) {
                                        signs[t] = Sign::positive;
                                        assign(t + 1);
                                    }
                                    if (g.has_neg(a, b)) {
                                        signs[t] = Sign::negative;
                                        assign(t + 1);
                                    }
                                };
                                assign(0);
                                continue;
                            }
                            if (blocked.count(next) || on_path.count(next)) continue;
                            if (static_cast<int>(path.size()) + 1 +
                                    static_cast<int>(c1.edges.size() + c2.edges.size()) >
                                max_edges)
                                continue;
                            path.push_back(next);
                            on_path.insert(next);
                            dfs();
                            on_path.erase(next);
                            path.pop_back();
                        }
                    };
                    dfs();
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const FrameCircuit& a, const FrameCircuit& b) {
        return std::tie(a.kind, a.support) < std::tie(b.kind, b.support);
    });
    return out;
}

bool is_flat_subgraph(const SignedGraph& g, const std::set<SignedEdge>& f) {
    auto all = g.signed_edges();
    for (const auto& e : f)
        if (std::find(all.begin(), all.end(), e) == all.end())
            throw std::invalid_argument("is_flat_subgraph: edge not in graph");
    auto build = [&](const std::set<SignedEdge>& edges) {
        SignedGraph h;
        h.vertices = g.vertices;
        for (const auto& e : edges) {
            if (e.u == e.v)
                h.loops.insert(e.u);
            else
                (e.sign == Sign::positive ? h.pos_edges : h.neg_edges).insert({e.u, e.v});
        }
        return h;
    };
    for (const auto& e : all) {
        if (f.count(e)) continue;
        auto extended = f;
        extended.insert(e);
        SignedGraph h = build(extended);
        for (const auto& fc : find_frame_circuits(h, static_cast<int>(extended.size())))
            if (fc.support.count(e)) return false;
    }
    return true;
}

bool divisional_edge(const SignedGraph& g, const DirectedEdge& e) {
    if (e.from == e.to) throw std::invalid_argument("divisional_edge: loops not allowed");
    IntPoly whole = chromatic_polynomial(g);
    IntPoly contracted = chromatic_polynomial(contract(g, e));
    return divide_exact(whole, contracted).has_value();
}

PeelResult peel_simplicial_extension(const SignedGraph& g) {
    PeelResult r{g, {}};
    for (;;) {
        Vertex pick = -1;
        for (Vertex v : r.base.vertices)
            if (is_signed_simplicial(r.base, v)) {
                pick = v;
                break;
            }
        if (pick < 0) break;
        r.peeled.push_back(pick);
        r.base = remove_vertex(r.base, pick);
    }
    return r;
}

}  // namespace sga
