#include "tropdelta/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tropdelta/canonical.hpp"
#include "tropdelta/errors.hpp"
#include "tropdelta/io.hpp"
#include "tropdelta/reconstruction.hpp"
#include "tropdelta/symmetry.hpp"

namespace tropdelta {

DeckSweep sweep_decks(const Complex& complex) {
    DeckSweep sweep;
    for (int m = 1; m <= complex.max_edges(); ++m) {
        for (int c = 0; c < static_cast<int>(complex.classes(m).size()); ++c) {
            const ClassData& cls = complex.data(m, c);
            if (betti_number(cls.graph) != complex.g() || cls.graph.vertex_count() < 3) continue;
            std::set<std::vector<int>> seen;
            std::vector<int> labelling(m);
            std::iota(labelling.begin(), labelling.end(), 0);
            do {
                const SimplexRef s = complex.normalize(SimplexRef{m - 1, c, labelling});
                if (!seen.insert(s.labelling).second) continue;
                const LabelledPair pair = complex.pair_of(s);
                ++sweep.pairs;
                const Deck deck = make_deck(pair);
                const CycleSet cycles = cycles_from_deck(deck);
                bool failed = false;
                if (cycles != total_cycles(pair)) {
                    ++sweep.cycle_mismatches;
                    failed = true;
                }
                try {
                    if (q_from_deck(deck, cycles) != intersection_matrix(pair)) {
                        ++sweep.matrix_mismatches;
                        failed = true;
                    }
                } catch (const Error&) {
                    ++sweep.matrix_mismatches;
                    failed = true;
                }
                try {
                    if (!pair_isomorphic(reconstruct(deck).pair, pair)) {
                        ++sweep.reconstruction_failures;
                        failed = true;
                    }
                } catch (const Error&) {
                    ++sweep.reconstruction_failures;
                    failed = true;
                }
                if (failed && sweep.witness.empty()) sweep.witness = pair_to_json(pair).dump();
            } while (std::next_permutation(labelling.begin(), labelling.end()));
        }
    }
    return sweep;
}

MuComparison compare_mu(const Skeleton& skeleton) {
    MuComparison out;
    const int g = skeleton.g(), n = skeleton.n();
    if (n < 1 || 2 * g - 2 + n < 3) return out;
    for (const auto& t : admissible_triples(g, n)) {
        ++out.triples;
        const std::int64_t brute = mu_bruteforce(skeleton, t);
        const std::int64_t formula = mu_formula(g, n, t);
        if (brute == formula) continue;
        const bool asserted = g >= 1 || t.k >= 1;
        ++(asserted ? out.mismatches : out.reported_mismatches);
        if (asserted && out.witness.empty()) {
            out.witness = "k=" + std::to_string(t.k) + " l=" + std::to_string(t.l) + " |A|=" +
                          std::to_string(t.a.size()) + " brute=" + std::to_string(brute) +
                          " formula=" + std::to_string(formula);
        }
    }
    return out;
}

bool VerifyReport::ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.passed; });
}

VerifyReport verify_all(int g, int n, const VerifyOptions& options) {
    VerifyReport report{g, n, {}};
    auto add = [&](std::string name, bool passed, std::string detail) {
        report.rows.push_back(CheckRow{std::move(name), passed, std::move(detail)});
    };

    const PurityReport purity = check_purity(g, n);
    add("closure equals upward generation", purity.closure_matches, std::to_string(purity.classes) + " classes");
    add("purity", purity.pure, purity.witness);
    const bool v_pure = std::all_of(purity.v_pure.begin(), purity.v_pure.end(), [](bool b) { return b; });
    add("V^i purity", v_pure, std::to_string(purity.v_pure.size()) + " levels");

    const Skeleton skeleton = cached_skeleton(g, n, options.cache_dir);
    const Complex complex(skeleton);

    const DeckSweep sweep = sweep_decks(complex);
    add("cycles from deck", sweep.cycle_mismatches == 0, std::to_string(sweep.pairs) + " pairs");
    add("Q from deck", sweep.matrix_mismatches == 0, std::to_string(sweep.pairs) + " pairs");
    add("reconstruction round trip", sweep.reconstruction_failures == 0,
        sweep.ok() ? std::to_string(sweep.pairs) + " pairs" : sweep.witness);

    const MuComparison mu = compare_mu(skeleton);
    std::string mu_detail = std::to_string(mu.triples) + " triples";
    if (mu.reported_mismatches) mu_detail += ", " + std::to_string(mu.reported_mismatches) + " g=0 (0,0) differences reported";
    if (!mu.witness.empty()) mu_detail += ", " + mu.witness;
    add("mu formula", mu.mismatches == 0, mu_detail);

    AutOptions aut_options;
    aut_options.threads = options.threads;
    aut_options.node_budget = options.node_budget;
    try {
        const AutGroup group = compute_aut(complex, aut_options);
        const SnIdentification sn = identify_sn(complex, group);
        add("Aut is the image of S_n", sn.surjective,
            "order " + std::to_string(group.order()) + (sn.injective ? ", S_n acts faithfully" : ", S_n action not faithful"));
        for (const auto& check : verify_structure_theorems(skeleton, complex, group)) {
            add(check.name, check.violations == 0,
                std::to_string(check.checked) + " checks" + (check.witness.empty() ? "" : ", " + check.witness));
        }
    } catch (const BudgetExceeded& e) {
        add("Aut is the image of S_n", false, e.what());
    }
    return report;
}

}  // namespace tropdelta
