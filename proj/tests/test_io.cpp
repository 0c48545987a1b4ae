#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <unistd.h>

#include "oracles.hpp"
#include "tropdelta/canonical.hpp"
#include "tropdelta/complex.hpp"
#include "tropdelta/errors.hpp"
#include "tropdelta/io.hpp"

using namespace tropdelta;
using nlohmann::json;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("tropdelta_test_" + name + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("graph records round trip") {
    const Skeleton s = enumerate_all(2, 2);
    for (int m = 0; m <= s.max_edges(); ++m) {
        for (const auto& g : s.with_edges(m)) {
            const json record = graph_to_json(g);
            REQUIRE(record["g"] == 2);
            REQUIRE(record["n"] == 2);
            REQUIRE(certificate(graph_from_json(json::parse(record.dump()))) == certificate(g));
        }
    }
}

TEST_CASE("pair records round trip") {
    std::mt19937 rng(53);
    const Complex c(enumerate_all(1, 3));
    for (int p = 0; p <= c.dimension(); ++p) {
        for (const auto& s : c.simplices(p)) {
            const LabelledPair pair = oracle::scramble(c.pair_of(s), rng);
            REQUIRE(pair_isomorphic(pair_from_json(pair_to_json(pair)), pair));
        }
    }
}

TEST_CASE("records use 1-based marking keys and arbitrary ids") {
    const json record = json::parse(R"({
        "g": 1, "n": 2,
        "vertices": [{"id": 7, "weight": 0}, {"id": 3, "weight": 0}],
        "edges": [{"id": 10, "ends": [7, 3], "label": 1}, {"id": 4, "ends": [3, 7], "label": 0}],
        "markings": {"1": 7, "2": 3}
    })");
    const LabelledPair p = pair_from_json(record);
    CHECK(p.graph.vertex_count() == 2);
    CHECK(p.graph.markings[0] != p.graph.markings[1]);
    CHECK(betti_number(p.graph) == 1);
}

TEST_CASE("malformed records are rejected") {
    const std::string base = R"({"g": 0, "n": 3, "vertices": [{"id": 0, "weight": 0}], "edges": [],
                                "markings": {"1": 0, "2": 0, "3": 0}})";
    CHECK_THROWS_AS(graph_from_json(json::parse(base)), UnstableGraph);
    json j = json::parse(R"({"g": 1, "n": 1, "vertices": [{"id": 0, "weight": 0}],
                             "edges": [{"id": 0, "ends": [0, 0]}], "markings": {"1": 0}})");
    CHECK_NOTHROW(graph_from_json(j));
    CHECK_THROWS_AS(pair_from_json(j), InvalidLabelling);
    j["g"] = 2;
    CHECK_THROWS_AS(graph_from_json(j), GenusMismatch);
    j["g"] = 1;
    j["markings"] = {{"2", 0}};
    CHECK_THROWS_AS(graph_from_json(j), InvalidGraph);
    j["markings"] = {{"1", 5}};
    CHECK_THROWS_AS(graph_from_json(j), InvalidGraph);
    j.erase("edges");
    CHECK_THROWS_AS(graph_from_json(j), InvalidGraph);
}

TEST_CASE("decks round trip") {
    const StableGraph g = make_graph({0, 0, 0}, {{0, 1}, {1, 2}, {2, 0}, {0, 0}}, {1, 2});
    const Deck d = make_deck(make_pair(g, {3, 1, 0, 2}));
    const Deck back = deck_from_json(json::parse(deck_to_json(d).dump()));
    CHECK(back.g == d.g);
    CHECK(back.n == d.n);
    CHECK(back.p == d.p);
    REQUIRE(back.entries.size() == d.entries.size());
    for (std::size_t i = 0; i < d.entries.size(); ++i) {
        CHECK(back.entries[i].index == d.entries[i].index);
        CHECK(pair_isomorphic(back.entries[i].pair, d.entries[i].pair));
    }
    json bad = deck_to_json(d);
    bad["entries"][0]["index"] = 9;
    CHECK_THROWS_AS(deck_from_json(bad), InvalidArgument);
    bad.erase("p");
    CHECK_THROWS_AS(deck_from_json(bad), InvalidArgument);
}

TEST_CASE("matrix rendering") {
    const IntersectionMatrix q{{2, 1, 1}, {1, 1, 0}, {1, 0, 1}};
    CHECK(format_matrix(q, 1, 1) == "   e0 e1 m1\ne0  2  1  1\ne1  1  1  0\nm1  1  0  1\n");
}

TEST_CASE("skeleton cache round trips and checks its header") {
    const auto dir = scratch_dir("cache");
    const Skeleton fresh = cached_skeleton(1, 3, dir);
    const auto file = dir / "skeleton_g1_n3.jsonl";
    REQUIRE(std::filesystem::exists(file));
    const auto loaded = load_skeleton(file, 1, 3);
    REQUIRE(loaded.has_value());
    REQUIRE(loaded->max_edges() == fresh.max_edges());
    for (int m = 0; m <= fresh.max_edges(); ++m) CHECK(loaded->certificates(m) == fresh.certificates(m));
    CHECK_FALSE(load_skeleton(file, 1, 4).has_value());
    CHECK_FALSE(load_skeleton(dir / "missing.jsonl", 1, 3).has_value());

    std::ifstream in(file);
    std::string header;
    std::getline(in, header);
    CHECK(json::parse(header)["tool_version"] == tool_version);
    std::filesystem::remove_all(dir);
}
