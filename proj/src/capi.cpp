#include "sga/sga_c.h"

#include <cstdlib>
#include <cstring>
#include <random>
#include <string>

#include "json.hpp"
#include "sga/arrangement.hpp"
#include "sga/coloring.hpp"
#include "sga/decide.hpp"
#include "sga/freeness.hpp"
#include "sga/harness.hpp"
#include "sga/random_graphs.hpp"
#include "sga/signed_graph.hpp"
#include "sga/signed_struct.hpp"
#include "sga/simple_graph.hpp"

struct sga_graph {
    sga::SignedGraph g;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** err, const std::string& msg) {
    if (err) *err = dup_string(msg);
}

template <typename F>
int guarded(char** err, F&& f) {
    try {
        return f();
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return SGA_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

int sga_graph_parse(const char* json, sga_graph** out, char** err) {
    if (!json || !out) {
        set_err(err, "null argument");
        return SGA_ERR_PARSE;
    }
    try {
        auto g = sga::parse_graph_json(json);
        *out = new sga_graph{std::move(g)};
        return SGA_OK;
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return SGA_ERR_PARSE;
    }
}

void sga_graph_free(sga_graph* g) { delete g; }

int sga_graph_to_json(const sga_graph* g, char** out) {
    if (!g || !out) return SGA_ERR_PARSE;
    *out = dup_string(sga::graph_to_json(g->g));
    return SGA_OK;
}

int sga_analyze(const sga_graph* g, int verify, char** json_out, char** err) {
    return guarded(err, [&] {
        sga::Verdict v = sga::decide(g->g);
        if (verify && g->g.vertices.size() <= 5 && g->g.num_hyperplanes() <= 16) {
            sga::FreenessResult fr = sga::freeness_decide(sga::realize(g->g));
            bool oracle_free = fr.status == sga::FreenessStatus::is_free;
            if (v.free != sga::TriBool::unknown &&
                oracle_free != (v.free == sga::TriBool::yes))
                throw std::logic_error("verdict disagrees with the derivation-module oracle");
            if (v.free == sga::TriBool::unknown) {
                v.free = oracle_free ? sga::TriBool::yes : sga::TriBool::no;
                v.free_certificate = fr.detail;
                v.provenance = "DerivationModule";
            }
            v.cross_checked = true;
        }
        if (json_out) *json_out = dup_string(sga::verdict_to_json(v));
        return v.free == sga::TriBool::unknown ? SGA_ERR_UNKNOWN : SGA_OK;
    });
}

int sga_chromatic(const sga_graph* g, char** json_out, char** err) {
    return guarded(err, [&] {
        *json_out = dup_string(sga::chromatic_polynomial(g->g).to_json());
        return SGA_OK;
    });
}

int sga_characteristic(const sga_graph* g, char** json_out, char** err) {
    return guarded(err, [&] {
        *json_out = dup_string(sga::characteristic_polynomial(sga::realize(g->g)).to_json());
        return SGA_OK;
    });
}

int sga_freeness(const sga_graph* g, char** json_out, char** err) {
    return guarded(err, [&] {
        sga::FreenessResult fr = sga::freeness_decide(sga::realize(g->g));
        if (fr.status == sga::FreenessStatus::out_of_range) {
            set_err(err, fr.detail);
            return SGA_ERR_RANGE;
        }
        nlohmann::json j;
        j["free"] = fr.status == sga::FreenessStatus::is_free;
        j["characteristic"] = nlohmann::json::parse(fr.chi.to_json());
        if (fr.status == sga::FreenessStatus::is_free) {
            j["exponents"] = fr.exponents;
            j["basis"] = fr.basis;
        }
        j["detail"] = fr.detail;
        if (json_out) *json_out = dup_string(j.dump(2));
        return SGA_OK;
    });
}

int sga_supersolvable(const sga_graph* g, char** json_out, char** err) {
    return guarded(err, [&] {
        sga::SSDecision d = sga::zaslavsky_ss_decide(g->g);
        nlohmann::json j;
        j["supersolvable"] = sga::tribool_str(d.value);
        j["certificate"] = d.how;
        if (!d.elimination_order.empty()) j["elimination_order"] = d.elimination_order;
        if (!d.peeled.empty()) j["peeled"] = d.peeled;
        if (json_out) *json_out = dup_string(j.dump(2));
        return SGA_OK;
    });
}

int sga_balanced_chordal(const sga_graph* g, char** json_out, char** err) {
    return guarded(err, [&] {
        auto w = sga::is_balanced_chordal(g->g);
        nlohmann::json j;
        j["balanced_chordal"] = !w.has_value();
        if (w) {
            j["cycle"] = w->cycle.vertices;
            nlohmann::json signs = nlohmann::json::array();
            for (sga::Sign s : w->cycle.signs)
                signs.push_back(s == sga::Sign::positive ? "+" : "-");
            j["signs"] = signs;
        }
        if (json_out) *json_out = dup_string(j.dump(2));
        return SGA_OK;
    });
}

int sga_csg_dot(const sga_graph* g, char** dot_out, char** err) {
    return guarded(err, [&] {
        sga::SimpleGraph pos{g->g.vertices, g->g.pos_edges};
        if (!sga::is_chordal(pos)) {
            auto peo = sga::perfect_elimination_ordering(pos);
            std::string msg = "positive part is not chordal";
            if (!peo.order) {
                msg += "; chordless cycle";
                for (sga::Vertex v : peo.chordless) msg += " " + std::to_string(v);
            }
            set_err(err, msg);
            return SGA_ERR_HYPOTHESIS;
        }
        *dot_out = dup_string(sga::csg_to_dot(sga::build_csg(pos)));
        return SGA_OK;
    });
}

int sga_random_graph(int n, uint64_t seed, const char* edge_class, const char* loop_policy,
                     char** json_out, char** err) {
    return guarded(err, [&] {
        if (n < 1) {
            set_err(err, "n must be at least 1");
            return SGA_ERR_HYPOTHESIS;
        }
        sga::EdgeClass cls;
        std::string ec = edge_class ? edge_class : "general";
        if (ec == "general")
            cls = sga::EdgeClass::general;
        else if (ec == "doubled")
            cls = sga::EdgeClass::doubled_subset;
        else {
            set_err(err, "edge_class must be \"general\" or \"doubled\"");
            return SGA_ERR_HYPOTHESIS;
        }
        sga::LoopPolicy lp;
        std::string p = loop_policy ? loop_policy : "random";
        if (p == "none")
            lp = sga::LoopPolicy::none;
        else if (p == "full")
            lp = sga::LoopPolicy::full;
        else if (p == "random")
            lp = sga::LoopPolicy::random_pick;
        else {
            set_err(err, "loop_policy must be \"none\", \"full\" or \"random\"");
            return SGA_ERR_HYPOTHESIS;
        }
        std::mt19937_64 rng(seed);
        *json_out = dup_string(sga::graph_to_json(sga::random_signed_graph(n, rng, cls, lp)));
        return SGA_OK;
    });
}

int sga_crosscheck(const char* mode, int max_n, uint64_t seed, int samples, char** report_out,
                   char** err) {
    return guarded(err, [&] {
        if (!mode) {
            set_err(err, "mode required");
            return SGA_ERR_HYPOTHESIS;
        }
        if (max_n > 5 && std::string(mode) != "chromatic") {
            set_err(err, "oracle crosscheck modes are limited to n <= 5");
            return SGA_ERR_HYPOTHESIS;
        }
        sga::CrosscheckReport r;
        try {
            r = sga::crosscheck(mode, max_n, seed, samples);
        } catch (const std::invalid_argument& e) {
            set_err(err, e.what());
            return SGA_ERR_HYPOTHESIS;
        }
        if (report_out) *report_out = dup_string(r.summary());
        return r.failures.empty() ? SGA_OK : SGA_ERR_INTERNAL;
    });
}

void sga_string_free(char* s) { std::free(s); }

}  // extern "C"
