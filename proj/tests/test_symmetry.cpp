#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tropdelta/errors.hpp"
#include "tropdelta/symmetry.hpp"
#include "tropdelta/verify.hpp"

using namespace tropdelta;

namespace {

struct Instance {
    Skeleton skeleton;
    Complex complex;

    Instance(int g, int n) : skeleton(enumerate_all(g, n)), complex(skeleton) {}
};

std::vector<int> random_perm(int size, std::mt19937& rng) {
    std::vector<int> a(size);
    std::iota(a.begin(), a.end(), 0);
    std::shuffle(a.begin(), a.end(), rng);
    return a;
}

/// Brute-force mu: three-vertex graphs without loops or triangles one contraction above H,
/// counted via explicit isomorphism search.
std::int64_t brute_mu(const Skeleton& s, const MuTriple& t) {
    const StableGraph h = mu_target(s.g(), s.n(), t);
    const auto target = oracle::brute_certificate(h);
    std::int64_t count = 0;
    const int m = h.edge_count() + 1;
    if (m > s.max_edges()) return 0;
    for (const auto& graph : s.with_edges(m)) {
        if (graph.vertex_count() != 3 || !oracle::brute_k_cycles(graph, 1).empty() ||
            !oracle::brute_k_cycles(graph, 3).empty())
            continue;
        for (int e = 0; e < m; ++e) {
            if (oracle::brute_certificate(contract(graph, e).graph) == target) {
                ++count;
                break;
            }
        }
    }
    return count;
}

}  // namespace

TEST_CASE("apply_sigma moves marking i to sigma(i)") {
    const StableGraph g = make_graph({0, 0}, {{0, 1}}, {0, 0, 1, 1});
    const StableGraph h = apply_sigma(g, {2, 1, 0, 3});
    CHECK(h.markings == std::vector<int>{1, 0, 0, 1});
    CHECK_THROWS_AS(apply_sigma(g, {0, 1}), InvalidArgument);
}

TEST_CASE("sigma automorphisms form a homomorphism") {
    std::mt19937 rng(41);
    const Instance x(1, 3);
    for (int t = 0; t < 10; ++t) {
        const auto a = random_perm(3, rng), b = random_perm(3, rng);
        std::vector<int> ab(3);
        for (int i = 0; i < 3; ++i) ab[i] = a[b[i]];
        CHECK(compose(x.complex, sigma_automorphism(x.complex, a), sigma_automorphism(x.complex, b)) ==
              sigma_automorphism(x.complex, ab));
    }
    CHECK(sigma_automorphism(x.complex, {0, 1, 2}) == identity_automorphism(x.complex));
}

TEST_CASE("complex automorphisms commute with faces") {
    const Instance x(0, 5);
    const AutGroup group = compute_aut(x.complex);
    for (const auto& phi : group.elements) {
        for (int p = 1; p <= x.complex.dimension(); ++p) {
            for (const auto& s : x.complex.simplices(p)) {
                for (int i = 0; i <= p; ++i) {
                    REQUIRE(apply(x.complex, phi, x.complex.face(s, i)) == x.complex.face(apply(x.complex, phi, s), i));
                }
            }
        }
    }
}

TEST_CASE("automorphisms are bijections on simplices") {
    const Instance x(1, 3);
    const AutGroup group = compute_aut(x.complex);
    for (const auto& phi : group.elements) {
        for (int p = 0; p <= x.complex.dimension(); ++p) {
            std::set<SimplexRef> image;
            const auto simplices = x.complex.simplices(p);
            for (const auto& s : simplices) image.insert(apply(x.complex, phi, s));
            REQUIRE(image.size() == simplices.size());
        }
    }
}

TEST_CASE("pruned and unpruned searches agree") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 4}, {1, 1}, {1, 2}, {2, 0}, {0, 5}, {1, 3}, {2, 1}, {3, 0}}) {
        CAPTURE(g);
        CAPTURE(n);
        const Instance x(g, n);
        AutOptions plain;
        plain.prune_by_invariants = false;
        CHECK(compute_aut(x.complex).elements == compute_aut(x.complex, plain).elements);
    }
}

TEST_CASE("group structure") {
    const Instance x(0, 5);
    const AutGroup group = compute_aut(x.complex);
    CHECK(group.order() == 120);
    CHECK(group.elements.front() == identity_automorphism(x.complex));
    std::mt19937 rng(43);
    for (int t = 0; t < 50; ++t) {
        const auto& a = group.elements[rng() % group.order()];
        const auto& b = group.elements[rng() % group.order()];
        REQUIRE(std::binary_search(group.elements.begin(), group.elements.end(), compose(x.complex, a, b)));
    }
    // Generators generate.
    std::set<ComplexAutomorphism> span{identity_automorphism(x.complex)};
    std::vector<ComplexAutomorphism> frontier(span.begin(), span.end());
    while (!frontier.empty()) {
        std::vector<ComplexAutomorphism> next;
        for (const auto& f : frontier) {
            for (int i : group.generators) {
                auto h = compose(x.complex, group.elements[i], f);
                if (span.insert(h).second) next.push_back(std::move(h));
            }
        }
        frontier = std::move(next);
    }
    CHECK(span.size() == group.order());
}

TEST_CASE("thread count does not change the result") {
    const Instance x(1, 3);
    AutOptions one, four;
    four.threads = 4;
    CHECK(compute_aut(x.complex, one).elements == compute_aut(x.complex, four).elements);
}

TEST_CASE("search limits") {
    const Instance x(0, 5);
    AutOptions tight;
    tight.node_budget = 5;
    CHECK_THROWS_AS(compute_aut(x.complex, tight), BudgetExceeded);
    AutOptions small;
    small.max_cells = 10;
    CHECK_THROWS_AS(compute_aut(x.complex, small), BudgetExceeded);
}

TEST_CASE("the symmetric group acts faithfully and onto at small types") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 5}, {1, 3}, {2, 2}}) {
        const Instance x(g, n);
        const SnIdentification sn = identify_sn(x.complex, compute_aut(x.complex));
        CHECK(sn.isomorphism());
    }
    const Instance x(0, 4);
    const SnIdentification sn = identify_sn(x.complex, compute_aut(x.complex));
    CHECK(sn.surjective);
    CHECK_FALSE(sn.injective);
}

TEST_CASE("admissible triples") {
    const auto triples = admissible_triples(1, 3);
    for (const auto& t : triples) {
        CHECK(t.k >= t.l);
        CHECK(b_admissible(1, 3, t.k, t.l, t.a));
    }
    CHECK(std::is_sorted(triples.begin(), triples.end()));
    CHECK(admissible_triples(0, 5).size() == 20);
}

TEST_CASE("mu counts agree with an isomorphism-search count") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 5}, {1, 3}, {2, 2}, {1, 4}}) {
        const Skeleton s = enumerate_all(g, n);
        for (const auto& t : admissible_triples(g, n)) REQUIRE(mu_bruteforce(s, t) == brute_mu(s, t));
    }
}

TEST_CASE("mu is invariant under relabelling the markings") {
    std::mt19937 rng(47);
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 6}, {1, 4}, {2, 2}}) {
        const Skeleton s = enumerate_all(g, n);
        for (const auto& t : admissible_triples(g, n)) {
            const auto sigma = random_perm(n, rng);
            MuTriple moved{t.k, t.l, {}};
            for (int x : t.a) moved.a.push_back(sigma[x]);
            std::sort(moved.a.begin(), moved.a.end());
            REQUIRE(mu_bruteforce(s, t) == mu_bruteforce(s, moved));
        }
    }
}

TEST_CASE("mu closed forms where asserted") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 2}, {2, 1}, {3, 1}}) {
        const MuComparison cmp = compare_mu(enumerate_all(g, n));
        CAPTURE(g);
        CAPTURE(n);
        CHECK(cmp.triples > 0);
        CHECK(cmp.mismatches == 0);
    }
}

TEST_CASE("frozen mu values in genus zero") {
    // Brute-force counts; the closed form for k = l = 0 in genus zero is only reported.
    const Skeleton s = enumerate_all(0, 5);
    CHECK(mu_bruteforce(s, MuTriple{0, 0, {0, 1}}) == 3);
    CHECK(mu_formula(0, 5, MuTriple{0, 0, {0, 1}}) == -2);
    const Skeleton s6 = enumerate_all(0, 6);
    CHECK(mu_bruteforce(s6, MuTriple{0, 0, {0, 1}}) == 10);
    CHECK(mu_bruteforce(s6, MuTriple{0, 0, {0, 1, 2}}) == 6);
}

TEST_CASE("structure theorems at small types") {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 5}, {1, 3}, {2, 1}, {3, 0}}) {
        const Instance x(g, n);
        for (const auto& check : verify_structure_theorems(x.skeleton, x.complex, compute_aut(x.complex))) {
            CAPTURE(check.name);
            CHECK(check.violations == 0);
        }
    }
}
