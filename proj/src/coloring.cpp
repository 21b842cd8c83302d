#include "sga/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

namespace sga {

namespace {

struct ColoringProblem {
    int n = 0;
    std::vector<uint8_t> has_loop;
    // constraints against earlier vertices only
    std::vector<std::vector<std::pair<int, Sign>>> back_edges;
};

ColoringProblem prepare(const SignedGraph& g) {
    ColoringProblem p;
    std::vector<Vertex> vs(g.vertices.begin(), g.vertices.end());
    std::map<Vertex, int> idx;
    for (size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = static_cast<int>(i);
    p.n = static_cast<int>(vs.size());
    p.has_loop.assign(p.n, 0);
    for (Vertex v : g.loops) p.has_loop[idx[v]] = 1;
    p.back_edges.assign(p.n, {});
    auto add = [&](const std::set<VertexPair>& es, Sign s) {
        for (const auto& [a, b] : es) {
            int i = idx[a], j = idx[b];
            p.back_edges[std::max(i, j)].push_back({std::min(i, j), s});
        }
    };
    add(g.pos_edges, Sign::positive);
    add(g.neg_edges, Sign::negative);
    return p;
}

uint64_t count_rec(const ColoringProblem& p, std::vector<int>& color, int i, int k) {
    if (i == p.n) return 1;
    uint64_t total = 0;
    for (int c = -k; c <= k; ++c) {
        if (c == 0 && p.has_loop[i]) continue;
        bool ok = true;
        for (const auto& [j, s] : p.back_edges[i]) {
            if (s == Sign::positive ? color[j] == c : color[j] == -c) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        color[i] = c;
        total += count_rec(p, color, i + 1, k);
    }
    return total;
}

}  // namespace

mpz_class count_proper_colorings(const SignedGraph& g, int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    ColoringProblem p = prepare(g);
    // (2k+1)^n fits in 64 bits for every size this library operates at
    if (p.n * std::log2(2.0 * k + 1.0) >= 62)
        throw std::invalid_argument("count_proper_colorings: instance too large");
    std::vector<int> color(p.n, 0);
    return mpz_class(static_cast<unsigned long>(count_rec(p, color, 0, k)));
}

IntPoly chromatic_polynomial(const SignedGraph& g) {
    int n = static_cast<int>(g.vertices.size());
    // nodes t = 2k+1 for k = 1..n+1 fix the degree-n polynomial
    std::vector<mpq_class> xs, ys;
    for (int k = 1; k <= n + 1; ++k) {
        xs.emplace_back(2 * k + 1);
        ys.emplace_back(count_proper_colorings(g, k));
    }
    // Newton's divided differences, exact over Q
    int m = static_cast<int>(xs.size());
    std::vector<std::vector<mpq_class>> dd(m);
    dd[0] = ys;
    for (int lvl = 1; lvl < m; ++lvl) {
        dd[lvl].resize(m - lvl);
        for (int i = 0; i + lvl < m; ++i)
            dd[lvl][i] = (dd[lvl - 1][i + 1] - dd[lvl - 1][i]) / (xs[i + lvl] - xs[i]);
    }
    // expand sum_j dd[j][0] * prod_{i<j} (t - x_i)
    std::vector<mpq_class> acc(m + 1, 0), basis(m + 1, 0);
    basis[0] = 1;
    int basis_deg = 0;
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i <= basis_deg; ++i) acc[i] += dd[j][0] * basis[i];
        // basis *= (t - x_j)
        for (int i = basis_deg + 1; i >= 1; --i) basis[i] = basis[i - 1] - xs[j] * basis[i];
        basis[0] = -xs[j] * basis[0];
        ++basis_deg;
    }
    std::vector<mpz_class> coeffs;
    for (int i = 0; i <= n; ++i) {
        mpq_class c = i < static_cast<int>(acc.size()) ? acc[i] : mpq_class(0);
        c.canonicalize();
        if (c.get_den() != 1)
            throw std::logic_error("chromatic interpolation produced a non-integer coefficient");
        coeffs.push_back(c.get_num());
    }
    IntPoly chi((std::vector<mpz_class>(coeffs)));
    if (chi.degree() != n || chi.leading() != 1)
        throw std::logic_error("chromatic polynomial must be monic of degree |V|");
    // consistency at a node not used for fitting
    if (chi.eval(2 * (n + 2) + 1) != count_proper_colorings(g, n + 2))
        throw std::logic_error("chromatic polynomial fails the held-out count");
    return chi;
}

SignedGraph graph_union(const SignedGraph& g1, const SignedGraph& g2) {
    SignedGraph g;
    g.vertices = g1.vertices;
    g.vertices.insert(g2.vertices.begin(), g2.vertices.end());
    g.pos_edges = g1.pos_edges;
    g.pos_edges.insert(g2.pos_edges.begin(), g2.pos_edges.end());
    g.neg_edges = g1.neg_edges;
    g.neg_edges.insert(g2.neg_edges.begin(), g2.neg_edges.end());
    g.loops = g1.loops;
    g.loops.insert(g2.loops.begin(), g2.loops.end());
    return g;
}

bool gluing_check(const SignedGraph& g1, const SignedGraph& g2, const std::set<Vertex>& shared) {
    std::set<Vertex> common;
    std::set_intersection(g1.vertices.begin(), g1.vertices.end(), g2.vertices.begin(),
                          g2.vertices.end(), std::inserter(common, common.begin()));
    if (common != shared) throw std::invalid_argument("gluing_check: overlap is not `shared`");
    SignedGraph bn = complete_signed(shared);
    if (induced_subgraph(g1, shared) != bn || induced_subgraph(g2, shared) != bn)
        throw std::invalid_argument("gluing_check: shared part must induce B_n in both graphs");

    SignedGraph g = graph_union(g1, g2);
    IntPoly lhs = chromatic_polynomial(g) * chromatic_polynomial(bn);
    IntPoly rhs = chromatic_polynomial(g1) * chromatic_polynomial(g2);
    return lhs == rhs;
}

}  // namespace sga
