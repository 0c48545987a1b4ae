#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropdelta/complex.hpp"
#include "tropdelta/enumeration.hpp"
#include "tropdelta/graph.hpp"

namespace tropdelta {

/// Relabels markings: marking i moves to position sigma[i] (m o sigma^-1), 0-based.
StableGraph apply_sigma(const StableGraph& graph, const std::vector<int>& sigma);
LabelledPair apply_sigma(const LabelledPair& pair, const std::vector<int>& sigma);

struct MuTriple {
    int k = 0;
    int l = 0;
    std::vector<int> a;  ///< sorted 0-based marking indices at the first vertex

    auto operator<=>(const MuTriple&) const = default;
};

/// Admissible (k, l, A) with k >= l, in lexicographic order.
std::vector<MuTriple> admissible_triples(int g, int n);
/// The graph H that the counted graphs contract onto.
StableGraph mu_target(int g, int n, const MuTriple& triple);
std::int64_t mu_bruteforce(const Skeleton& skeleton, const MuTriple& triple);
std::int64_t mu_formula(int g, int n, const MuTriple& triple);

/// An automorphism of the complex: a class permutation per edge count and, per class, an
/// edge bijection onto its image, stored as the least representative modulo Aut_E of the image.
struct ComplexAutomorphism {
    std::vector<std::vector<int>> class_map;
    std::vector<std::vector<std::vector<int>>> edge_maps;

    auto operator<=>(const ComplexAutomorphism&) const = default;
};

ComplexAutomorphism identity_automorphism(const Complex& complex);
/// second o first.
ComplexAutomorphism compose(const Complex& complex, const ComplexAutomorphism& second,
                            const ComplexAutomorphism& first);
SimplexRef apply(const Complex& complex, const ComplexAutomorphism& phi, const SimplexRef& simplex);
/// f_sigma.
ComplexAutomorphism sigma_automorphism(const Complex& complex, const std::vector<int>& sigma);

struct AutOptions {
    /// Restrict candidate images to classes and edges with equal cycle and bridge data.
    bool prune_by_invariants = true;
    std::size_t max_cells = 0;       ///< refuse complexes with more classes; 0 for no limit
    std::uint64_t node_budget = 0;   ///< search nodes before giving up; 0 for no limit
    int threads = 1;
};

struct AutGroup {
    std::vector<ComplexAutomorphism> elements;  ///< sorted; identity first
    std::vector<int> generators;                ///< indices into elements
    std::uint64_t nodes = 0;

    std::size_t order() const { return elements.size(); }
};

/// Throws BudgetExceeded when a bound in the options is hit.
AutGroup compute_aut(const Complex& complex, const AutOptions& options = {});

struct SnIdentification {
    std::vector<int> image;  ///< per permutation of S_n in lexicographic order: group element index, or -1
    bool surjective = false;
    bool injective = false;
    bool isomorphism() const { return surjective && injective; }
};

SnIdentification identify_sn(const Complex& complex, const AutGroup& group);

struct TheoremCheck {
    std::string name;
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::string witness;
};

std::vector<TheoremCheck> verify_structure_theorems(const Skeleton& skeleton, const Complex& complex,
                                                    const AutGroup& group);

}  // namespace tropdelta
