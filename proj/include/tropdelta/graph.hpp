#pragma once

#include <array>
#include <vector>

namespace tropdelta {

/// Connected multigraph as half-edges. Half-edges 2e and 2e+1 form edge e,
/// so the pairing is the fixed-point-free involution h -> h ^ 1.
class HalfEdgeGraph {
public:
    HalfEdgeGraph() = default;
    HalfEdgeGraph(int vertex_count, std::vector<int> root);

    /// Renumbers an arbitrary fixed-point-free involution into the paired layout.
    static HalfEdgeGraph from_involution(int vertex_count, const std::vector<int>& root,
                                         const std::vector<int>& pairing);

    int vertex_count() const { return vertex_count_; }
    int half_edge_count() const { return static_cast<int>(root_.size()); }
    int edge_count() const { return half_edge_count() / 2; }
    int root(int h) const { return root_[h]; }
    static int partner(int h) { return h ^ 1; }
    const std::vector<int>& roots() const { return root_; }

    /// Endpoints of edge e, smaller first.
    std::array<int, 2> ends(int e) const;
    bool is_loop(int e) const { return root_[2 * e] == root_[2 * e + 1]; }
    bool connected() const;

private:
    int vertex_count_ = 0;
    std::vector<int> root_;
};

/// Stable weighted marked graph. Marking i + 1 sits at vertex markings[i].
struct StableGraph {
    HalfEdgeGraph topology;
    std::vector<int> weights;
    std::vector<int> markings;

    int vertex_count() const { return topology.vertex_count(); }
    int edge_count() const { return topology.edge_count(); }
    int marking_count() const { return static_cast<int>(markings.size()); }
    std::array<int, 2> ends(int e) const { return topology.ends(e); }
    bool is_loop(int e) const { return topology.is_loop(e); }
};

/// Builds a graph and checks indices and connectivity. Stability is checked by validate().
StableGraph make_graph(std::vector<int> weights, const std::vector<std::array<int, 2>>& edges,
                       std::vector<int> markings);

std::vector<std::array<int, 2>> edge_list(const StableGraph& graph);

int betti_number(const StableGraph& graph);
int genus(const StableGraph& graph);
/// Number of half-edges at v; a loop counts twice.
int valence(const StableGraph& graph, int v);
/// valence plus the number of markings at v.
int legs(const StableGraph& graph, int v);
int loop_count(const StableGraph& graph, int v);
int marking_count_at(const StableGraph& graph, int v);

bool is_stable(const StableGraph& graph);
/// Throws UnstableGraph or GenusMismatch.
void validate(const StableGraph& graph, int g, int n);

bool is_bridge(const StableGraph& graph, int e);
/// Contracting every other edge and forgetting markings leaves weights {g, 0}.
bool is_g0_bridge(const StableGraph& graph, int e);

struct Contraction {
    StableGraph graph;
    std::vector<int> edge_map;    ///< old edge -> new edge, -1 for the contracted edge
    std::vector<int> vertex_map;  ///< old vertex -> new vertex
};

Contraction contract(const StableGraph& graph, int e);
/// Contracts every edge in the set. Surviving edges keep their relative order.
Contraction contract_edges(const StableGraph& graph, const std::vector<int>& edges);

/// Edge sets of k-cycles, each sorted, in lexicographic order. 1-cycles are loops.
std::vector<std::vector<int>> k_cycles(const StableGraph& graph, int k);

/// Edge-labelled pair (G, tau). labels[e] is the label of edge e, a bijection onto [0, p].
struct LabelledPair {
    StableGraph graph;
    std::vector<int> labels;

    int p() const { return graph.edge_count() - 1; }
    int edge_with_label(int label) const;
};

/// Throws InvalidLabelling unless labels is a bijection onto [0, |E| - 1].
LabelledPair make_pair(StableGraph graph, std::vector<int> labels);
LabelledPair identity_labelled(StableGraph graph);

/// Order-preserving collapse [p] \ {i} -> [p - 1].
inline int collapse(int i, int x) { return x > i ? x - 1 : x; }
/// Order-preserving insertion [p - 1] -> [p] \ {j}.
inline int expand(int j, int x) { return x >= j ? x + 1 : x; }

/// Face d_i: contracts the edge labelled i.
LabelledPair face(const LabelledPair& pair, int label);
/// Contracts every edge whose label is in the set and relabels by rank.
LabelledPair contract_labels(const LabelledPair& pair, const std::vector<int>& labels);
/// Relabels by a permutation a of [p]: the new label of e is a[labels[e]].
LabelledPair relabel(const LabelledPair& pair, const std::vector<int>& a);

/// Label sets of k-cycles, each sorted, in lexicographic order.
std::vector<std::vector<int>> k_cycle_labels(const LabelledPair& pair, int k);

}  // namespace tropdelta
