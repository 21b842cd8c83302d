#include "sga/harness.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "sga/arrangement.hpp"
#include "sga/coloring.hpp"
#include "sga/decide.hpp"
#include "sga/freeness.hpp"
#include "sga/random_graphs.hpp"
#include "sga/signed_struct.hpp"

namespace sga {

std::string CrosscheckReport::summary() const {
    std::ostringstream os;
    os << "crosscheck " << mode << ": " << checked << " instances, " << failures.size()
       << " disagreement" << (failures.size() == 1 ? "" : "s");
    for (const auto& f : failures) os << "\n  " << f;
    return os.str();
}

namespace {

void check_chromatic(CrosscheckReport& r, const SignedGraph& g) {
    ++r.checked;
    if (chromatic_polynomial(g) != characteristic_polynomial(realize(g)))
        r.failures.push_back(graph_to_json(g));
}

void check_main_theorem(CrosscheckReport& r, const SignedGraph& g) {
    ++r.checked;
    bool bc = !is_balanced_chordal(g).has_value();
    FreenessResult fr = freeness_decide(realize(g));
    if (fr.status == FreenessStatus::out_of_range)
        throw std::invalid_argument("crosscheck main-theorem: instance out of oracle range");
    if (bc != (fr.status == FreenessStatus::is_free)) r.failures.push_back(graph_to_json(g));
}

void check_er(CrosscheckReport& r, const SignedGraph& g) {
    ++r.checked;
    ERDecision er = er_decide(g);
    if (!er.applicable) throw std::logic_error("crosscheck er: positive part not complete");
    FreenessResult fr = freeness_decide(realize(g));
    if (fr.status == FreenessStatus::out_of_range)
        throw std::invalid_argument("crosscheck er: instance out of oracle range");
    if (er.free != (fr.status == FreenessStatus::is_free)) r.failures.push_back(graph_to_json(g));
}

}  // namespace

CrosscheckReport crosscheck(const std::string& mode, int max_n, uint64_t seed, int samples) {
    CrosscheckReport r;
    r.mode = mode;
    std::mt19937_64 rng(seed);
    if (mode == "chromatic") {
        for (int n = 1; n <= std::min(max_n, 3); ++n)
            for (const SignedGraph& g : all_signed_graphs(n)) check_chromatic(r, g);
        for (int n = 4; n <= max_n; ++n)
            for (int s = 0; s < samples; ++s)
                check_chromatic(r, random_signed_graph(n, rng, EdgeClass::general,
                                                       LoopPolicy::random_pick));
        return r;
    }
    if (mode == "main-theorem") {
        for (int n = 1; n <= std::min(max_n, 4); ++n)
            for (const SignedGraph& g : all_doubled_full_loops(n)) check_main_theorem(r, g);
        return r;
    }
    if (mode == "er") {
        for (int n = 1; n <= std::min(max_n, 4); ++n)
            for (const SignedGraph& g : all_complete_positive(n)) check_er(r, g);
        return r;
    }
    throw std::invalid_argument("unknown crosscheck mode: " + mode);
}

}  // namespace sga
