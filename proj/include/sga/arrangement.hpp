#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sga/intpoly.hpp"
#include "sga/signed_graph.hpp"

namespace sga {

struct Hyperplane {
    std::vector<long> normal;  // primitive, first nonzero entry positive
    std::string label;
};

struct Arrangement {
    int dim = 0;
    std::vector<Hyperplane> hyperplanes;
    int size() const { return static_cast<int>(hyperplanes.size()); }
};

/// Hyperplanes x_i - x_j (positive edges), x_i + x_j (negative edges), x_i
/// (loops); coordinates follow the sorted vertex order.
Arrangement realize(const SignedGraph& g);

struct Flat {
    uint32_t mask = 0;  // hyperplanes containing the flat
    int rank = 0;
    mpz_class mobius;
};

struct IntersectionLattice {
    int dim = 0;
    int nhyp = 0;
    std::vector<Flat> flats;  // sorted by (rank, mask); flats[0] is the bottom
    std::map<uint32_t, int> index;

    int rank() const;  // rank of the top flat
    int closure(uint32_t mask) const;
    int join(int x, int y) const;
    int meet(int x, int y) const;
    bool is_modular_flat(int x) const;
};

IntersectionLattice intersection_lattice(const Arrangement& a);

IntPoly characteristic_polynomial(const Arrangement& a);

/// Restriction to hyperplanes[h]; coordinate `pivot` is eliminated
/// (pivot = -1 picks the last coordinate with a nonzero normal entry).
Arrangement restriction(const Arrangement& a, int h, int pivot = -1);

struct SupersolvableResult {
    bool supersolvable = false;
    std::vector<uint32_t> chain;  // modular flat masks, ranks 0..r
};

SupersolvableResult is_supersolvable_lattice(const Arrangement& a);

/// Rank of a set of hyperplane normals.
int normals_rank(const Arrangement& a, uint32_t mask);

/// Multiset of rank-indexed flat counts; lattice isomorphism invariant used
/// by the restriction/contraction cross-checks.
std::vector<int> whitney_profile(const IntersectionLattice& l);

}  // namespace sga
