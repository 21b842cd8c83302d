#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "json.hpp"

#include "sga/sga_c.h"

namespace {

struct Str {
    char* p = nullptr;
    ~Str() { sga_string_free(p); }
    std::string s() const { return p ? p : ""; }
};

struct Graph {
    sga_graph* g = nullptr;
    ~Graph() { sga_graph_free(g); }
};

Graph parse_ok(const std::string& json) {
    Graph g;
    Str err;
    REQUIRE(sga_graph_parse(json.c_str(), &g.g, &err.p) == SGA_OK);
    return g;
}

const char* kB3 =
    R"({"vertices":[1,2,3],"positive":[[1,2],[1,3],[2,3]],)"
    R"("negative":[[1,2],[1,3],[2,3]],"loops":[1,2,3]})";

}  // namespace

TEST_CASE("graph parse and canonical serialization") {
    Graph g = parse_ok(R"({"vertices":[2,1],"positive":[[2,1]],"negative":[],"loops":[2]})");
    Str out;
    REQUIRE(sga_graph_to_json(g.g, &out.p) == SGA_OK);
    CHECK(out.s() == R"({"vertices":[1,2],"positive":[[1,2]],"negative":[],"loops":[2]})");
}

TEST_CASE("parse failures report SGA_ERR_PARSE") {
    for (const char* bad : {"not json", "{}",
                            R"({"vertices":[1],"positive":[[1,2]],"negative":[],"loops":[]})",
                            R"({"vertices":[1],"positive":[],"negative":[],"loops":[2]})"}) {
        sga_graph* g = nullptr;
        Str err;
        CHECK(sga_graph_parse(bad, &g, &err.p) == SGA_ERR_PARSE);
        CHECK(g == nullptr);
        CHECK(!err.s().empty());
    }
}

TEST_CASE("analyze with verification") {
    Graph g = parse_ok(kB3);
    Str out, err;
    REQUIRE(sga_analyze(g.g, 1, &out.p, &err.p) == SGA_OK);
    auto j = nlohmann::json::parse(out.s());
    CHECK(j.at("free") == "yes");
    CHECK(j.at("supersolvable") == "yes");
    CHECK(j.at("balanced_chordal") == true);
    CHECK(j.at("cross_checked") == true);
}

TEST_CASE("chromatic and characteristic agree over the C interface") {
    Graph g = parse_ok(kB3);
    Str a, b, err;
    REQUIRE(sga_chromatic(g.g, &a.p, &err.p) == SGA_OK);
    REQUIRE(sga_characteristic(g.g, &b.p, &err.p) == SGA_OK);
    CHECK(a.s() == b.s());
    // (t-1)(t-3)(t-5) = t^3 - 9t^2 + 23t - 15
    CHECK(nlohmann::json::parse(a.s()) ==
          nlohmann::json::parse(R"(["-15","23","-9","1"])"));
}

TEST_CASE("freeness range limit") {
    // B5: 25 hyperplanes, beyond the exact oracle
    std::string b5 = R"({"vertices":[1,2,3,4,5],"positive":[)";
    std::string pairs;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            pairs += (pairs.empty() ? "" : ",") + std::string("[") + std::to_string(i) + "," +
                     std::to_string(j) + "]";
    b5 += pairs + R"(],"negative":[)" + pairs + R"(],"loops":[1,2,3,4,5]})";
    Graph g = parse_ok(b5);
    Str out, err;
    CHECK(sga_freeness(g.g, &out.p, &err.p) == SGA_ERR_RANGE);
    CHECK(!err.s().empty());

    Graph small = parse_ok(kB3);
    Str out2, err2;
    REQUIRE(sga_freeness(small.g, &out2.p, &err2.p) == SGA_OK);
    auto j = nlohmann::json::parse(out2.s());
    CHECK(j.at("free") == true);
    CHECK(j.at("exponents") == nlohmann::json::parse("[1,3,5]"));
}

TEST_CASE("csg requires a chordal positive part") {
    Graph g = parse_ok(kB3);
    Str dot, err;
    REQUIRE(sga_csg_dot(g.g, &dot.p, &err.p) == SGA_OK);
    CHECK(dot.s().rfind("digraph csg {", 0) == 0);

    Graph c4 = parse_ok(
        R"({"vertices":[1,2,3,4],"positive":[[1,2],[2,3],[3,4],[1,4]],)"
        R"("negative":[],"loops":[]})");
    Str dot2, err2;
    CHECK(sga_csg_dot(c4.g, &dot2.p, &err2.p) == SGA_ERR_HYPOTHESIS);
    CHECK(err2.s().find("chordless") != std::string::npos);
}

TEST_CASE("random graph generation is deterministic per seed") {
    Str a, b, c, err;
    REQUIRE(sga_random_graph(5, 123, "general", "random", &a.p, &err.p) == SGA_OK);
    REQUIRE(sga_random_graph(5, 123, "general", "random", &b.p, &err.p) == SGA_OK);
    REQUIRE(sga_random_graph(5, 124, "general", "random", &c.p, &err.p) == SGA_OK);
    CHECK(a.s() == b.s());
    CHECK(a.s() != c.s());

    auto j = nlohmann::json::parse(a.s());
    CHECK(j.at("vertices").size() == 5);

    Str d, err2;
    REQUIRE(sga_random_graph(4, 9, "doubled", "full", &d.p, &err2.p) == SGA_OK);
    auto jd = nlohmann::json::parse(d.s());
    CHECK(jd.at("loops").size() == 4);
    for (const auto& e : jd.at("negative"))
        CHECK(std::find(jd.at("positive").begin(), jd.at("positive").end(), e) !=
              jd.at("positive").end());

    Str bad, err3;
    CHECK(sga_random_graph(4, 1, "nonsense", "full", &bad.p, &err3.p) == SGA_ERR_HYPOTHESIS);
}

TEST_CASE("crosscheck harness") {
    Str report, err;
    REQUIRE(sga_crosscheck("chromatic", 3, 1, 0, &report.p, &err.p) == SGA_OK);
    CHECK(report.s().find("0 disagreement") != std::string::npos);

    Str report2, err2;
    REQUIRE(sga_crosscheck("er", 3, 1, 0, &report2.p, &err2.p) == SGA_OK);

    Str report3, err3;
    CHECK(sga_crosscheck("nonsense", 3, 1, 0, &report3.p, &err3.p) == SGA_ERR_HYPOTHESIS);
}
