#include <doctest.h>

#include "oracles.hpp"
#include "tropdelta/canonical.hpp"
#include "tropdelta/enumeration.hpp"

using namespace tropdelta;

namespace {

std::vector<std::size_t> level_sizes(const Skeleton& s) {
    std::vector<std::size_t> out;
    for (int m = 0; m <= s.max_edges(); ++m) out.push_back(s.with_edges(m).size());
    return out;
}

}  // namespace

TEST_CASE("skeleton matches exhaustive search") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{
             {0, 4}, {0, 5}, {0, 6}, {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {3, 0}}) {
        CAPTURE(g);
        CAPTURE(n);
        const Skeleton s = enumerate_all(g, n);
        const auto brute = oracle::brute_stable_graphs(g, n);
        REQUIRE(s.size() == brute.size());
        for (const auto& [code, graph] : brute) {
            const int index = s.index_of(graph);
            REQUIRE(index >= 0);
            REQUIRE(oracle::brute_certificate(s.with_edges(graph.edge_count())[index]) == code);
        }
    }
}

TEST_CASE("frozen class counts") {
    const std::vector<std::tuple<int, int, std::size_t>> expected{
        {1, 1, 2},  {0, 4, 4},   {1, 2, 5},   {2, 0, 7},   {0, 5, 26},   {2, 1, 16},
        {1, 3, 23}, {3, 0, 42},  {2, 2, 75},  {1, 4, 163}, {0, 6, 236},  {0, 7, 2752}};
    for (const auto& [g, n, count] : expected) {
        CAPTURE(g);
        CAPTURE(n);
        CHECK(enumerate_all(g, n).size() == count);
    }
}

TEST_CASE("per-edge counts for small types") {
    CHECK(level_sizes(enumerate_all(1, 1)) == std::vector<std::size_t>{1, 1});
    CHECK(level_sizes(enumerate_all(0, 4)) == std::vector<std::size_t>{1, 3});
    CHECK(level_sizes(enumerate_all(1, 2)) == std::vector<std::size_t>{1, 2, 2});
    CHECK(level_sizes(enumerate_all(2, 0)) == std::vector<std::size_t>{1, 2, 2, 2});
}

TEST_CASE("facets are trivalent and weight zero") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 6}, {1, 4}, {2, 2}, {3, 0}}) {
        const auto facets = enumerate_facets(g, n);
        const Skeleton s = enumerate_all(g, n);
        CHECK(facets.size() == s.with_edges(s.max_edges()).size());
        for (const auto& f : facets) {
            REQUIRE(f.edge_count() == 3 * g - 3 + n);
            for (int v = 0; v < f.vertex_count(); ++v) {
                REQUIRE(f.weights[v] == 0);
                REQUIRE(legs(f, v) == 3);
            }
        }
    }
    CHECK(enumerate_facets(0, 6).size() == 105);
    CHECK(enumerate_facets(3, 0).size() == 5);
}

TEST_CASE("skeleton is closed under contraction") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 6}, {1, 4}, {2, 2}, {3, 0}}) {
        const Skeleton s = enumerate_all(g, n);
        for (int m = 1; m <= s.max_edges(); ++m) {
            for (const auto& graph : s.with_edges(m)) {
                for (int e = 0; e < m; ++e) REQUIRE(s.index_of(contract(graph, e).graph) >= 0);
            }
        }
    }
}

TEST_CASE("classes respect the vertex and edge bounds") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 6}, {1, 4}, {2, 2}, {3, 0}}) {
        const Skeleton s = enumerate_all(g, n);
        for (int m = 0; m <= s.max_edges(); ++m) {
            for (const auto& graph : s.with_edges(m)) {
                REQUIRE(graph.vertex_count() <= 2 * g - 2 + n);
                REQUIRE(graph.edge_count() <= 3 * g - 3 + n);
                REQUIRE(genus(graph) == g);
                REQUIRE(is_stable(graph));
            }
        }
    }
}

TEST_CASE("every class with a cycle contracts to the one-loop graph") {
    for (int g : {2, 3}) {
        const Skeleton s = enumerate_all(g, 0);
        const Certificate r1 = certificate(make_graph({g - 1}, {{0, 0}}, {}));
        for (int m = 1; m <= s.max_edges(); ++m) {
            for (const auto& graph : s.with_edges(m)) {
                if (betti_number(graph) == 0) continue;
                // Contract a spanning tree, then all loops but one.
                std::vector<int> keep;
                for (int e = 0; e < m; ++e) {
                    if (!is_bridge(graph, e)) {
                        keep.push_back(e);
                        break;
                    }
                }
                REQUIRE(keep.size() == 1);
                std::vector<int> rest;
                for (int e = 0; e < m; ++e) {
                    if (e != keep[0]) rest.push_back(e);
                }
                REQUIRE(certificate(contract_edges(graph, rest).graph) == r1);
            }
        }
    }
}

TEST_CASE("index_of finds every class and nothing else") {
    const Skeleton s = enumerate_all(1, 3);
    for (int m = 0; m <= s.max_edges(); ++m) {
        for (int i = 0; i < static_cast<int>(s.with_edges(m).size()); ++i) {
            REQUIRE(s.index_of(s.with_edges(m)[i]) == i);
            REQUIRE(s.index_of(s.certificates(m)[i], m) == i);
        }
    }
    CHECK(s.index_of(make_graph({1}, {}, {0, 0, 0, 0})) == -1);
}

TEST_CASE("upward generation agrees with the closure") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 6}, {1, 3}, {2, 1}, {3, 0}}) {
        const Skeleton down = enumerate_all(g, n);
        const Skeleton up = enumerate_by_uncontraction(g, n);
        REQUIRE(down.max_edges() == up.max_edges());
        for (int m = 0; m <= down.max_edges(); ++m) REQUIRE(down.certificates(m) == up.certificates(m));
    }
}

TEST_CASE("purity holds at small types") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 5}, {1, 3}, {2, 1}, {3, 0}, {1, 4}}) {
        const PurityReport r = check_purity(g, n);
        CHECK(r.closure_matches);
        CHECK(r.pure);
        CHECK(r.v_pure.size() == static_cast<std::size_t>(2 * g - 2 + n));
        for (bool b : r.v_pure) CHECK(b);
    }
}

TEST_CASE("edge-labelled counts") {
    const StableGraph theta = make_graph({0, 0}, {{0, 1}, {0, 1}, {0, 1}}, {});
    CHECK(count_edge_labelled(theta) == 1);
    const StableGraph dumbbell = make_graph({0, 0}, {{0, 0}, {0, 1}, {1, 1}}, {});
    CHECK(count_edge_labelled(dumbbell) == 3);
    const StableGraph loop = make_graph({0}, {{0, 0}}, {0});
    CHECK(count_edge_labelled(loop) == 1);
}
