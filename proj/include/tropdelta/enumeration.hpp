#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "tropdelta/canonical.hpp"
#include "tropdelta/graph.hpp"

namespace tropdelta {

/// Isomorphism classes of Gamma_{g,n}, grouped by edge count and sorted by certificate.
class Skeleton {
public:
    Skeleton() = default;
    Skeleton(int g, int n, std::vector<std::vector<StableGraph>> by_edges);

    int g() const { return g_; }
    int n() const { return n_; }
    int max_edges() const { return static_cast<int>(by_edges_.size()) - 1; }
    const std::vector<StableGraph>& with_edges(int m) const { return by_edges_.at(m); }
    const std::vector<Certificate>& certificates(int m) const { return certificates_.at(m); }
    std::size_t size() const;
    /// Index of the class within its edge count, or -1.
    int index_of(const Certificate& certificate, int edges) const;
    int index_of(const StableGraph& graph) const;

private:
    int g_ = 0;
    int n_ = 0;
    std::vector<std::vector<StableGraph>> by_edges_;
    std::vector<std::vector<Certificate>> certificates_;
    std::vector<std::unordered_map<Certificate, int>> index_;
};

/// Trivalent weight-zero graphs with 3g - 3 + n edges, canonical representatives.
std::vector<StableGraph> enumerate_facets(int g, int n);
/// Closure of the facets under edge contraction.
Skeleton enumerate_all(int g, int n);
/// All stable graphs reached from the one-vertex graph by uncontractions.
Skeleton enumerate_by_uncontraction(int g, int n);

/// Number of p-simplices supported on the class: |E|! / |Aut_E(G)|.
std::uint64_t count_edge_labelled(const StableGraph& graph);

struct PurityReport {
    int g = 0;
    int n = 0;
    std::size_t classes = 0;
    /// Downward closure of the facets equals the upward generation from the point.
    bool closure_matches = false;
    /// Every class without an uncontraction has 3g - 3 + n edges.
    bool pure = false;
    /// v_pure[i - 1] for 1 <= i <= 2g - 2 + n.
    std::vector<bool> v_pure;
    std::string witness;
};

PurityReport check_purity(int g, int n);

}  // namespace tropdelta
