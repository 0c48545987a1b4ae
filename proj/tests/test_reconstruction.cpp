#include <doctest.h>

#include "oracles.hpp"
#include "tropdelta/complex.hpp"
#include "tropdelta/errors.hpp"
#include "tropdelta/reconstruction.hpp"
#include "tropdelta/verify.hpp"

using namespace tropdelta;

namespace {

/// Every simplex of the complex with b1 = g and at least `min_vertices` vertices.
std::vector<LabelledPair> eligible_pairs(const Complex& c, int min_vertices) {
    std::vector<LabelledPair> out;
    for (int p = 0; p <= c.dimension(); ++p) {
        for (const auto& s : c.simplices(p)) {
            const StableGraph& g = c.data(s).graph;
            if (betti_number(g) == c.g() && g.vertex_count() >= min_vertices) out.push_back(c.pair_of(s));
        }
    }
    return out;
}

CycleSet brute_cycles(const LabelledPair& pair) {
    CycleSet out(pair.p() + 2);
    for (int k = 1; k <= pair.p() + 1; ++k) {
        for (const auto& cycle : oracle::brute_k_cycles(pair.graph, k)) {
            std::vector<int> labels;
            for (int e : cycle) labels.push_back(pair.labels[e]);
            std::sort(labels.begin(), labels.end());
            out[k].push_back(labels);
        }
        std::sort(out[k].begin(), out[k].end());
    }
    return out;
}

}  // namespace

TEST_CASE("deck entries are the nonloop faces") {
    const StableGraph g = make_graph({0, 0, 0}, {{0, 1}, {1, 2}, {2, 0}, {0, 0}}, {1, 2});
    const LabelledPair p = make_pair(g, {2, 0, 3, 1});
    const Deck d = make_deck(p);
    CHECK(d.p == 3);
    CHECK(d.g == 2);
    REQUIRE(d.entries.size() == 3);
    CHECK(d.entries[0].index == 0);
    CHECK(d.entries[1].index == 2);
    CHECK(d.entries[2].index == 3);
    for (const auto& e : d.entries) CHECK(pair_isomorphic(e.pair, face(p, e.index)));
}

TEST_CASE("intersection matrix follows the definition") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 5}, {1, 3}, {2, 1}, {3, 0}}) {
        const Complex c(enumerate_all(g, n));
        for (const auto& pair : eligible_pairs(c, 1)) REQUIRE(intersection_matrix(pair) == oracle::brute_intersection(pair));
    }
}

TEST_CASE("total cycles follow the definition") {
    const Complex c(enumerate_all(2, 2));
    for (const auto& pair : eligible_pairs(c, 1)) REQUIRE(total_cycles(pair) == brute_cycles(pair));
}

TEST_CASE("deck pipeline is exact at small types") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 5}, {0, 6}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {3, 0}}) {
        CAPTURE(g);
        CAPTURE(n);
        const DeckSweep sweep = sweep_decks(Complex(enumerate_all(g, n)));
        CHECK(sweep.pairs > 0);
        CHECK(sweep.cycle_mismatches == 0);
        CHECK(sweep.matrix_mismatches == 0);
        CHECK(sweep.reconstruction_failures == 0);
        CHECK(sweep.witness.empty());
    }
}

TEST_CASE("generic formula suffices from five vertices") {
    const Complex c(enumerate_all(0, 7));
    std::size_t checked = 0;
    for (const auto& pair : eligible_pairs(c, 5)) {
        const Deck d = make_deck(pair);
        const CycleSet cycles = cycles_from_deck(d);
        REQUIRE(q_from_deck(d, cycles, QOptions{true}) == intersection_matrix(pair));
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("generic formula alone is wrong on some small graphs") {
    const Complex c(enumerate_all(1, 3));
    std::size_t wrong = 0;
    for (const auto& pair : eligible_pairs(c, 3)) {
        const Deck d = make_deck(pair);
        try {
            if (q_from_deck(d, cycles_from_deck(d), QOptions{true}) != intersection_matrix(pair)) ++wrong;
        } catch (const InternalInconsistency&) {
            ++wrong;
        }
    }
    CHECK(wrong > 0);
}

TEST_CASE("shape classification on four vertices") {
    // Four-cycle with a chord: two triangles sharing an edge.
    const StableGraph diamond =
        make_graph({0, 0, 0, 0}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}, {1, 3});
    const Deck d = make_deck(identity_labelled(diamond));
    CHECK(classify_full_subgraph(d, cycles_from_deck(d)) == FullSubgraph::e1);
    CHECK(detect_full_subgraph(d, cycles_from_deck(d), FullSubgraph::e1));
    CHECK(to_string(FullSubgraph::e1) == "E1");
    // Plain four-cycle with markings.
    const StableGraph square = make_graph({0, 0, 0, 0}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {0, 1, 2, 3});
    const Deck s = make_deck(identity_labelled(square));
    CHECK(classify_full_subgraph(s, cycles_from_deck(s)) == FullSubgraph::e2);
}

TEST_CASE("reconstruction does not depend on which maximal entry is used") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 6}, {1, 3}, {2, 1}, {3, 0}}) {
        const Complex c(enumerate_all(g, n));
        for (const auto& pair : eligible_pairs(c, 3)) {
            const Deck d = make_deck(pair);
            for (const auto& entry : d.entries) {
                ReconstructOptions options;
                options.preferred_entry = entry.index;
                const Reconstruction r = reconstruct(d, options);
                REQUIRE(pair_isomorphic(r.pair, pair));
            }
        }
    }
}

TEST_CASE("uncontract inverts the face map") {
    const StableGraph g = make_graph({0, 0}, {{0, 1}, {0, 1}, {0, 0}}, {0, 1});
    const LabelledPair p = identity_labelled(g);
    UncontractionSpec spec;
    spec.vertex = 0;
    spec.n1 = {0};
    spec.n2 = {1};
    spec.l1 = {2};
    spec.i2 = {0};
    const LabelledPair up = uncontract(p, 1, spec);
    CHECK(up.graph.vertex_count() == 3);
    CHECK(up.p() == 3);
    CHECK(pair_isomorphic(face(up, 1), p));
    spec.l1 = {};
    spec.l2 = {2};
    spec.n1 = {0, 1};
    spec.n2 = {};
    CHECK(pair_isomorphic(face(uncontract(p, 0, spec), 0), p));
}

TEST_CASE("uncontract rejects bad specifications") {
    const StableGraph g = make_graph({1, 0}, {{0, 1}, {0, 0}}, {0, 1, 1});
    const LabelledPair p = identity_labelled(g);
    UncontractionSpec spec;
    spec.vertex = 0;
    spec.n1 = {0};
    spec.l1 = {1};
    spec.i1 = {0};
    spec.w1 = 1;
    CHECK_THROWS_AS(uncontract(p, 0, spec), UnstableGraph);
    spec.w1 = 0;
    CHECK_THROWS_AS(uncontract(p, 0, spec), InvalidArgument);
    spec.w1 = 1;
    spec.n1 = {};
    CHECK_THROWS_AS(uncontract(p, 0, spec), InvalidArgument);
    spec.vertex = 5;
    CHECK_THROWS_AS(uncontract(p, 0, spec), InvalidArgument);
}

TEST_CASE("reconstruct refuses decks outside its hypotheses") {
    // Two vertices only.
    const StableGraph two = make_graph({0, 0}, {{0, 1}, {0, 1}, {0, 1}}, {0});
    CHECK_THROWS_AS(reconstruct(make_deck(identity_labelled(two))), InvalidArgument);
    CHECK_THROWS_AS(q_from_deck(make_deck(identity_labelled(two)), total_cycles(identity_labelled(two))),
                    InvalidArgument);
    // Positive weight means b1 != g.
    const StableGraph weighted = make_graph({1, 0, 0}, {{0, 1}, {1, 2}, {2, 0}}, {0, 1, 2});
    CHECK_THROWS_AS(reconstruct(make_deck(identity_labelled(weighted))), InvalidArgument);
    CHECK_THROWS_AS(reconstruct(Deck{}), ReconstructionFailure);
}

TEST_CASE("an unrealizable deck is reported") {
    const StableGraph path = make_graph({0, 0, 0}, {{0, 1}, {1, 2}}, {0, 0, 1, 2, 2});
    // The two remaining splits {1,2,3 | 4,5} and {1,4 | 2,3,5} are incompatible.
    const StableGraph other = make_graph({0, 0, 0}, {{0, 1}, {1, 2}}, {0, 1, 2, 0, 2});
    Deck d = make_deck(identity_labelled(path));
    d.entries[1] = make_deck(identity_labelled(other)).entries[1];
    CHECK_THROWS_AS(reconstruct(d), ReconstructionFailure);
}

TEST_CASE("experimental generic mode handles weighted decks when it can") {
    const Complex c(enumerate_all(1, 5));
    std::size_t attempted = 0, recovered = 0;
    for (int p = 0; p <= c.dimension(); ++p) {
        for (const auto& s : c.simplices(p)) {
            const StableGraph& g = c.data(s).graph;
            if (betti_number(g) == c.g() || g.vertex_count() < 5) continue;
            const LabelledPair pair = c.pair_of(s);
            ++attempted;
            try {
                ReconstructOptions options;
                options.experimental_generic = true;
                recovered += pair_isomorphic(reconstruct(make_deck(pair), options).pair, pair) ? 1 : 0;
            } catch (const Error&) {
            }
        }
    }
    CHECK(attempted > 0);
    MESSAGE("experimental generic mode recovered " << recovered << " of " << attempted);
}
