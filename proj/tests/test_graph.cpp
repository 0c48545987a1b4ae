#include <doctest.h>

#include "oracles.hpp"
#include "tropdelta/canonical.hpp"
#include "tropdelta/enumeration.hpp"
#include "tropdelta/errors.hpp"
#include "tropdelta/graph.hpp"

using namespace tropdelta;

namespace {

std::vector<StableGraph> corpus() {
    std::vector<StableGraph> out;
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 5}, {1, 3}, {2, 1}, {3, 0}}) {
        const Skeleton s = enumerate_all(g, n);
        for (int m = 0; m <= s.max_edges(); ++m) {
            for (const auto& graph : s.with_edges(m)) out.push_back(graph);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("half-edge layout pairs 2e with 2e+1") {
    const HalfEdgeGraph h = HalfEdgeGraph::from_involution(2, {0, 0, 1, 0, 1, 0}, {2, 4, 0, 5, 1, 3});
    CHECK(h.edge_count() == 3);
    CHECK(HalfEdgeGraph::partner(4) == 5);
    int loops = 0;
    for (int e = 0; e < h.edge_count(); ++e) loops += h.is_loop(e) ? 1 : 0;
    CHECK(loops == 1);
    CHECK(h.connected());
}

TEST_CASE("make_graph rejects malformed input") {
    CHECK_THROWS_AS(make_graph({0, 0}, {{0, 2}}, {0, 1}), InvalidGraph);
    CHECK_THROWS_AS(make_graph({0, 0}, {}, {0, 1}), InvalidGraph);
    CHECK_THROWS_AS(make_graph({-1}, {}, {0, 0, 0, 0}), InvalidGraph);
    CHECK_THROWS_AS(make_graph({0}, {}, {1}), InvalidGraph);
}

TEST_CASE("validate reports stability and genus") {
    const StableGraph loop = make_graph({0}, {{0, 0}}, {0});
    CHECK_NOTHROW(validate(loop, 1, 1));
    CHECK_THROWS_AS(validate(loop, 2, 1), GenusMismatch);
    const StableGraph bare = make_graph({0, 0}, {{0, 1}}, {0, 0, 1});
    CHECK_FALSE(is_stable(bare));
    CHECK_THROWS_AS(validate(bare, 0, 3), UnstableGraph);
    CHECK_THROWS_AS(validate(make_graph({1}, {}, {}), 1, 0), UnstableGraph);
}

TEST_CASE("genus, valence and legs") {
    const StableGraph g = make_graph({1, 0}, {{0, 1}, {0, 1}, {1, 1}}, {1, 0});
    CHECK(betti_number(g) == 2);
    CHECK(genus(g) == 3);
    CHECK(valence(g, 1) == 4);
    CHECK(legs(g, 1) == 5);
    CHECK(loop_count(g, 1) == 1);
    CHECK(marking_count_at(g, 0) == 1);
}

TEST_CASE("k_cycles agrees with subset search") {
    for (const auto& g : corpus()) {
        for (int k = 1; k <= g.edge_count(); ++k) REQUIRE(k_cycles(g, k) == oracle::brute_k_cycles(g, k));
    }
}

TEST_CASE("is_bridge agrees with connectivity after removal") {
    for (const auto& g : corpus()) {
        for (int e = 0; e < g.edge_count(); ++e) {
            REQUIRE(is_bridge(g, e) == (!g.is_loop(e) && !oracle::connected_after_removing(g, e)));
        }
    }
}

TEST_CASE("g0 bridges separate all the genus onto one side") {
    const StableGraph b = make_graph({2, 0}, {{0, 1}}, {1, 1});
    CHECK(is_g0_bridge(b, 0));
    const StableGraph split = make_graph({1, 1}, {{0, 1}}, {});
    CHECK_FALSE(is_g0_bridge(split, 0));
    const StableGraph loop = make_graph({0, 0}, {{0, 0}, {0, 1}}, {1, 1});
    CHECK(is_g0_bridge(loop, 1));
}

TEST_CASE("contraction preserves type and stability") {
    for (const auto& g : corpus()) {
        for (int e = 0; e < g.edge_count(); ++e) {
            const Contraction c = contract(g, e);
            REQUIRE(genus(c.graph) == genus(g));
            REQUIRE(c.graph.marking_count() == g.marking_count());
            REQUIRE(is_stable(c.graph));
            REQUIRE(c.graph.edge_count() == g.edge_count() - 1);
            REQUIRE(c.edge_map[e] == -1);
        }
    }
}

TEST_CASE("contracting a set does not depend on order") {
    for (const auto& g : corpus()) {
        if (g.edge_count() < 2) continue;
        std::vector<int> edges{0, g.edge_count() - 1};
        Contraction once = contract_edges(g, edges);
        Contraction first = contract(g, edges[1]);
        Contraction second = contract(first.graph, first.edge_map[edges[0]]);
        REQUIRE(isomorphic(once.graph, second.graph));
    }
}

TEST_CASE("labelled pairs validate their labelling") {
    const StableGraph g = make_graph({0}, {{0, 0}, {0, 0}}, {0});
    CHECK_THROWS_AS(make_pair(g, {0, 0}), InvalidLabelling);
    CHECK_THROWS_AS(make_pair(g, {0}), InvalidLabelling);
    CHECK_THROWS_AS(make_pair(g, {1, 2}), InvalidLabelling);
    const LabelledPair p = make_pair(g, {1, 0});
    CHECK(p.p() == 1);
    CHECK(p.edge_with_label(0) == 1);
}

TEST_CASE("collapse and expand are inverse") {
    for (int i = 0; i <= 5; ++i) {
        for (int x = 0; x <= 5; ++x) {
            if (x == i) continue;
            CHECK(expand(i, collapse(i, x)) == x);
        }
        for (int y = 0; y < 5; ++y) CHECK(collapse(i, expand(i, y)) == y);
    }
}

TEST_CASE("faces commute as in a semi-simplicial set") {
    // d_i d_j = d_{j-1} d_i for i < j.
    for (const auto& g : corpus()) {
        const int m = g.edge_count();
        if (m < 2) continue;
        const LabelledPair p = identity_labelled(g);
        for (int j = 1; j < m; ++j) {
            for (int i = 0; i < j; ++i) {
                REQUIRE(pair_isomorphic(face(face(p, j), i), face(face(p, i), j - 1)));
            }
        }
    }
}

TEST_CASE("contract_labels matches iterated faces") {
    for (const auto& g : corpus()) {
        const int m = g.edge_count();
        if (m < 3) continue;
        const LabelledPair p = identity_labelled(g);
        REQUIRE(pair_isomorphic(contract_labels(p, {0, 2}), face(face(p, 2), 0)));
    }
}

TEST_CASE("relabel then cycle labels") {
    const StableGraph g = make_graph({0, 0}, {{0, 1}, {0, 1}, {0, 0}}, {1});
    const LabelledPair p = identity_labelled(g);
    CHECK(k_cycle_labels(p, 2) == std::vector<std::vector<int>>{{0, 1}});
    const LabelledPair q = relabel(p, {2, 0, 1});
    CHECK(k_cycle_labels(q, 2) == std::vector<std::vector<int>>{{0, 2}});
    CHECK(k_cycle_labels(q, 1) == std::vector<std::vector<int>>{{1}});
}
