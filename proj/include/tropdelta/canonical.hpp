#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropdelta/graph.hpp"

namespace tropdelta {

/// full: weighted marked isomorphism. weak: markings are erased entirely.
enum class IsoMode { full, weak };

/// Byte string; equal iff the inputs are isomorphic in the chosen mode.
using Certificate = std::string;

std::string to_hex(const Certificate& certificate);
Certificate from_hex(const std::string& hex);

struct CanonicalForm {
    Certificate certificate;
    std::vector<int> order;     ///< canonical position -> vertex
    std::vector<int> position;  ///< vertex -> canonical position
};

CanonicalForm canonical_form(const StableGraph& graph, IsoMode mode = IsoMode::full);
Certificate certificate(const StableGraph& graph, IsoMode mode = IsoMode::full);

/// Canonical representative of the isomorphism class and an isomorphism onto it.
struct CanonicalGraph {
    StableGraph graph;
    std::vector<int> edge_map;  ///< input edge -> representative edge
    Certificate certificate;
};

CanonicalGraph canonical_graph(const StableGraph& graph);

bool isomorphic(const StableGraph& a, const StableGraph& b, IsoMode mode = IsoMode::full);
/// Edge map of some isomorphism a -> b, if one exists.
std::optional<std::vector<int>> edge_isomorphism(const StableGraph& a, const StableGraph& b);

/// All vertex permutations (v -> image) that are automorphisms, sorted.
std::vector<std::vector<int>> vertex_automorphisms(const StableGraph& graph,
                                                   IsoMode mode = IsoMode::full);
/// Aut_E(G): distinct edge permutations induced by automorphisms, sorted; identity first.
std::vector<std::vector<int>> edge_automorphisms(const StableGraph& graph);

Certificate pair_certificate(const LabelledPair& pair, IsoMode mode = IsoMode::full);
bool pair_isomorphic(const LabelledPair& a, const LabelledPair& b, IsoMode mode = IsoMode::full);

}  // namespace tropdelta
