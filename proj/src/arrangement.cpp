#include "sga/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sga/linalg.hpp"

namespace sga {

namespace {

void normalize(std::vector<long>& v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (long& x : v) x /= g;
    for (long x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (long& y : v) y = -y;
        break;
    }
}

}  // namespace

Arrangement realize(const SignedGraph& g) {
    g.validate();
    Arrangement a;
    std::vector<Vertex> vs(g.vertices.begin(), g.vertices.end());
    std::map<Vertex, int> idx;
    for (size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = static_cast<int>(i);
    a.dim = static_cast<int>(vs.size());
    auto add = [&](std::vector<long> n, std::string label) {
        normalize(n);
        a.hyperplanes.push_back({std::move(n), std::move(label)});
    };
    for (const auto& [u, v] : g.pos_edges) {
        std::vector<long> n(a.dim, 0);
        n[idx[u]] = 1;
        n[idx[v]] = -1;
        std::ostringstream os;
        os << "x" << u << "-x" << v;
        add(std::move(n), os.str());
    }
    for (const auto& [u, v] : g.neg_edges) {
        std::vector<long> n(a.dim, 0);
        n[idx[u]] = 1;
        n[idx[v]] = 1;
        std::ostringstream os;
        os << "x" << u << "+x" << v;
        add(std::move(n), os.str());
    }
    for (Vertex v : g.loops) {
        std::vector<long> n(a.dim, 0);
        n[idx[v]] = 1;
        std::ostringstream os;
        os << "x" << v;
        add(std::move(n), os.str());
    }
    return a;
}

int normals_rank(const Arrangement& a, uint32_t mask) {
    std::vector<std::vector<long>> rows;
    for (int h = 0; h < a.size(); ++h)
        if (mask & (1u << h)) rows.push_back(a.hyperplanes[h].normal);
    if (rows.empty()) return 0;
    return rank_int(std::move(rows));
}

namespace {

uint32_t closure_mask(const Arrangement& a, uint32_t mask, const std::vector<int>& mask_rank_hint,
                      int r) {
    uint32_t out = mask;
    for (int h = 0; h < a.size(); ++h) {
        if (out & (1u << h)) continue;
        if (normals_rank(a, mask | (1u << h)) == r) out |= 1u << h;
    }
    (void)mask_rank_hint;
    return out;
}

}  // namespace

IntersectionLattice intersection_lattice(const Arrangement& a) {
    if (a.size() > 25) throw std::invalid_argument("intersection_lattice: too many hyperplanes");
    IntersectionLattice l;
    l.dim = a.dim;
    l.nhyp = a.size();

    std::map<uint32_t, int> rank_of;  // closed mask -> rank
    auto close = [&](uint32_t mask) {
        int r = normals_rank(a, mask);
        return std::pair<uint32_t, int>(closure_mask(a, mask, {}, r), r);
    };
    std::vector<uint32_t> queue;
    auto [bottom, r0] = close(0);
    rank_of[bottom] = r0;
    queue.push_back(bottom);
    while (!queue.empty()) {
        uint32_t x = queue.back();
        queue.pop_back();
        for (int h = 0; h < a.size(); ++h) {
            if (x & (1u << h)) continue;
            auto [y, ry] = close(x | (1u << h));
            if (rank_of.emplace(y, ry).second) queue.push_back(y);
        }
    }

    for (const auto& [mask, r] : rank_of) l.flats.push_back({mask, r, 0});
    std::sort(l.flats.begin(), l.flats.end(), [](const Flat& x, const Flat& y) {
        return std::tie(x.rank, x.mask) < std::tie(y.rank, y.mask);
    });
    for (size_t i = 0; i < l.flats.size(); ++i) l.index[l.flats[i].mask] = static_cast<int>(i);

    // Mobius function from the bottom, by increasing rank
    for (size_t i = 0; i < l.flats.size(); ++i) {
        mpz_class mu = (i == 0) ? 1 : 0;
        for (size_t j = 0; j < i; ++j)
            if ((l.flats[j].mask & l.flats[i].mask) == l.flats[j].mask) mu -= l.flats[j].mobius;
        l.flats[i].mobius = mu;
    }
    return l;
}

int IntersectionLattice::rank() const { return flats.empty() ? 0 : flats.back().rank; }

int IntersectionLattice::closure(uint32_t mask) const {
    // smallest flat whose mask contains `mask`
    int best = -1;
    for (size_t i = 0; i < flats.size(); ++i) {
        if ((flats[i].mask & mask) != mask) continue;
        if (best < 0 || (flats[i].mask & flats[best].mask) == flats[i].mask)
            best = static_cast<int>(i);
    }
    if (best < 0) throw std::logic_error("closure: no containing flat");
    return best;
}

int IntersectionLattice::join(int x, int y) const { return closure(flats[x].mask | flats[y].mask); }

int IntersectionLattice::meet(int x, int y) const {
    auto it = index.find(flats[x].mask & flats[y].mask);
    if (it == index.end()) throw std::logic_error("meet: intersection of flats is not a flat");
    return it->second;
}

bool IntersectionLattice::is_modular_flat(int x) const {
    for (size_t y = 0; y < flats.size(); ++y) {
        int j = join(x, static_cast<int>(y));
        int m = meet(x, static_cast<int>(y));
        if (flats[x].rank + flats[y].rank != flats[j].rank + flats[m].rank) return false;
    }
    return true;
}

IntPoly characteristic_polynomial(const Arrangement& a) {
    IntersectionLattice l = intersection_lattice(a);
    IntPoly chi;
    for (const Flat& f : l.flats) {
        std::vector<mpz_class> mono(a.dim - f.rank + 1, 0);
        mono[a.dim - f.rank] = f.mobius;
        chi = chi + IntPoly(std::move(mono));
    }
    return chi;
}

Arrangement restriction(const Arrangement& a, int h, int pivot) {
    if (h < 0 || h >= a.size()) throw std::invalid_argument("restriction: bad hyperplane index");
    const auto& nu = a.hyperplanes[h].normal;
    if (pivot < -1 || pivot >= a.dim) throw std::invalid_argument("restriction: bad pivot");
    if (pivot < 0) {
        for (int i = a.dim - 1; i >= 0; --i)
            if (nu[i] != 0) {
                pivot = i;
                break;
            }
    }
    if (pivot < 0 || pivot >= a.dim || nu[pivot] == 0)
        throw std::invalid_argument("restriction: pivot coordinate not on the hyperplane normal");
    Arrangement r;
    r.dim = a.dim - 1;
    std::set<std::vector<long>> seen;
    for (int k = 0; k < a.size(); ++k) {
        if (k == h) continue;
        const auto& al = a.hyperplanes[k].normal;
        std::vector<long> beta;
        beta.reserve(r.dim);
        for (int i = 0; i < a.dim; ++i) {
            if (i == pivot) continue;
            beta.push_back(al[i] * nu[pivot] - al[pivot] * nu[i]);
        }
        bool zero = std::all_of(beta.begin(), beta.end(), [](long x) { return x == 0; });
        if (zero) continue;
        normalize(beta);
        if (seen.insert(beta).second) r.hyperplanes.push_back({beta, a.hyperplanes[k].label});
    }
    return r;
}

SupersolvableResult is_supersolvable_lattice(const Arrangement& a) {
    IntersectionLattice l = intersection_lattice(a);
    int top_rank = l.rank();
    std::map<int, char> modular_memo;
    auto modular = [&](int x) {
        auto it = modular_memo.find(x);
        if (it != modular_memo.end()) return it->second != 0;
        bool m = l.is_modular_flat(x);
        modular_memo[x] = m;
        return m;
    };
    std::vector<uint32_t> chain{l.flats[0].mask};
    std::function<bool(int)> dfs = [&](int x) {
        if (l.flats[x].rank == top_rank) return true;
        for (size_t y = 0; y < l.flats.size(); ++y) {
            if (l.flats[y].rank != l.flats[x].rank + 1) continue;
            if ((l.flats[y].mask & l.flats[x].mask) != l.flats[x].mask) continue;
            if (!modular(static_cast<int>(y))) continue;
            chain.push_back(l.flats[y].mask);
            if (dfs(static_cast<int>(y))) return true;
            chain.pop_back();
        }
        return false;
    };
    SupersolvableResult res;
    if (!modular(0)) return res;  // bottom flat is always modular in fact
    res.supersolvable = dfs(0);
    if (res.supersolvable) res.chain = chain;
    return res;
}

std::vector<int> whitney_profile(const IntersectionLattice& l) {
    std::vector<int> counts(l.rank() + 1, 0);
    for (const Flat& f : l.flats) ++counts[f.rank];
    return counts;
}

}  // namespace sga
