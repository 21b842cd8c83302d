// Command-line front end; talks to the library through the C interface only.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sga/sga_c.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitHypothesis = 4;

int status_to_exit(int status) {
    switch (status) {
        case SGA_OK: return kExitOk;
        case SGA_ERR_PARSE: return kExitParse;
        case SGA_ERR_UNKNOWN: return kExitUnknown;
        case SGA_ERR_HYPOTHESIS: return kExitHypothesis;
        case SGA_ERR_RANGE: return kExitHypothesis;
        default: return kExitInternal;
    }
}

std::string take(char* s) {
    if (!s) return {};
    std::string out(s);
    sga_string_free(s);
    return out;
}

int read_input(const std::string& path, std::string& out) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        out = ss.str();
        return kExitOk;
    }
    std::ifstream f(path);
    if (!f) {
        std::cerr << "error: cannot open " << path << "\n";
        return kExitParse;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    out = ss.str();
    return kExitOk;
}

int load_graph(const std::string& path, sga_graph** g) {
    std::string text;
    if (int rc = read_input(path, text); rc != kExitOk) return rc;
    char* err = nullptr;
    int status = sga_graph_parse(text.c_str(), g, &err);
    if (status != SGA_OK) {
        std::cerr << "parse error: " << take(err) << "\n";
        return kExitParse;
    }
    return kExitOk;
}

// Runs `fn(graph)` on the parsed input and prints its string output.
template <typename F>
int graph_command(const std::string& path, F&& fn) {
    sga_graph* g = nullptr;
    if (int rc = load_graph(path, &g); rc != kExitOk) return rc;
    char* out = nullptr;
    char* err = nullptr;
    int status = fn(g, &out, &err);
    sga_graph_free(g);
    std::string msg = take(err);
    std::string body = take(out);
    if (!body.empty()) std::cout << body << "\n";
    if (!msg.empty() && status != SGA_OK) std::cerr << "error: " << msg << "\n";
    return status_to_exit(status);
}

uint64_t effective_seed(uint64_t cli_seed) {
    if (const char* env = std::getenv("SGA_SEED")) return std::strtoull(env, nullptr, 10);
    return cli_seed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed-graph arrangement analyzer"};
    app.require_subcommand(1);

    std::string path = "-";
    uint64_t seed = 0;
    int n = 4;
    int samples = 200;
    int max_n = 4;
    std::string mode = "chromatic";
    std::string edge_class = "general";
    std::string loop_policy = "random";
    std::string dump_path = "crosscheck_failures.txt";
    bool verify = false;

    auto* analyze = app.add_subcommand("analyze", "full verdict for a graph");
    analyze->add_option("path", path, "graph JSON file ('-' for stdin)");
    analyze->add_flag("--verify", verify, "also run the exact oracle on small instances");

    auto* chromatic = app.add_subcommand("chromatic", "signed chromatic polynomial");
    chromatic->add_option("path", path);

    auto* characteristic =
        app.add_subcommand("characteristic", "characteristic polynomial of the arrangement");
    characteristic->add_option("path", path);

    auto* freeness = app.add_subcommand("freeness", "exact freeness oracle");
    freeness->add_option("path", path);

    auto* supersolvable = app.add_subcommand("supersolvable", "supersolvability with certificate");
    supersolvable->add_option("path", path);

    auto* balanced = app.add_subcommand("balanced-chordal", "balanced chordality with witness");
    balanced->add_option("path", path);

    auto* csg = app.add_subcommand("csg", "clique-separator graph of the positive part, as DOT");
    csg->add_option("path", path);

    auto* random = app.add_subcommand("random", "generate a random graph");
    random->add_option("-n,--vertices", n, "number of vertices");
    random->add_option("--seed", seed, "RNG seed (SGA_SEED overrides)");
    random->add_option("--edge-class", edge_class, "general | doubled");
    random->add_option("--loops", loop_policy, "none | full | random");

    auto* crosscheck = app.add_subcommand("crosscheck", "theorem-vs-oracle comparison");
    crosscheck->add_option("--mode", mode, "chromatic | main-theorem | er");
    crosscheck->add_option("--max-n", max_n, "largest vertex count");
    crosscheck->add_option("--seed", seed, "RNG seed (SGA_SEED overrides)");
    crosscheck->add_option("--samples", samples, "random samples per size (chromatic mode)");
    crosscheck->add_option("--dump", dump_path, "file for disagreeing graphs");

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed())
        return graph_command(path, [&](sga_graph* g, char** out, char** err) {
            return sga_analyze(g, verify ? 1 : 0, out, err);
        });
    if (chromatic->parsed()) return graph_command(path, sga_chromatic);
    if (characteristic->parsed()) return graph_command(path, sga_characteristic);
    if (freeness->parsed()) return graph_command(path, sga_freeness);
    if (supersolvable->parsed()) return graph_command(path, sga_supersolvable);
    if (balanced->parsed()) return graph_command(path, sga_balanced_chordal);
    if (csg->parsed()) return graph_command(path, sga_csg_dot);

    if (random->parsed()) {
        char* out = nullptr;
        char* err = nullptr;
        int status = sga_random_graph(n, effective_seed(seed), edge_class.c_str(),
                                      loop_policy.c_str(), &out, &err);
        if (status == SGA_OK)
            std::cout << take(out) << "\n";
        else
            std::cerr << "error: " << take(err) << "\n";
        return status_to_exit(status);
    }

    if (crosscheck->parsed()) {
        char* out = nullptr;
        char* err = nullptr;
        int status =
            sga_crosscheck(mode.c_str(), max_n, effective_seed(seed), samples, &out, &err);
        std::string report = take(out);
        std::string msg = take(err);
        if (!report.empty()) std::cout << report << "\n";
        if (status == SGA_ERR_INTERNAL && !report.empty()) {
            std::ofstream dump(dump_path);
            dump << report << "\n";
            std::cerr << "disagreements written to " << dump_path << "\n";
            return kExitInternal;
        }
        if (!msg.empty()) std::cerr << "error: " << msg << "\n";
        return status_to_exit(status);
    }

    return kExitInternal;
}
