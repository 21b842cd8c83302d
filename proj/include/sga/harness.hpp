#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sga {

struct CrosscheckReport {
    std::string mode;
    int checked = 0;
    std::vector<std::string> failures;  // canonical JSON of each disagreeing graph
    std::string summary() const;
};

/// Compares fast decisions against the exhaustive oracles.
///   "chromatic": coloring-count polynomial vs lattice characteristic polynomial
///   "main-theorem": balanced chordality vs derivation-module freeness
///                   (doubled negative edges, loops everywhere)
///   "er": complete-positive-part criterion vs derivation-module freeness
/// Exhaustive for small n where feasible, seeded samples otherwise.
CrosscheckReport crosscheck(const std::string& mode, int max_n, uint64_t seed, int samples);

}  // namespace sga
