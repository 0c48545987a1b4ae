#include "tropdelta/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tropdelta/errors.hpp"

namespace tropdelta {

HalfEdgeGraph::HalfEdgeGraph(int vertex_count, std::vector<int> root)
    : vertex_count_(vertex_count), root_(std::move(root)) {
    if (vertex_count_ < 1) throw InvalidGraph("graph needs at least one vertex");
    if (root_.size() % 2 != 0) throw InvalidGraph("odd number of half-edges");
    for (int r : root_) {
        if (r < 0 || r >= vertex_count_) throw InvalidGraph("half-edge root out of range");
    }
}

HalfEdgeGraph HalfEdgeGraph::from_involution(int vertex_count, const std::vector<int>& root,
                                             const std::vector<int>& pairing) {
    if (root.size() != pairing.size()) throw InvalidGraph("root and pairing sizes differ");
    const int h_count = static_cast<int>(root.size());
    std::vector<int> paired_root;
    std::vector<bool> seen(h_count, false);
    for (int h = 0; h < h_count; ++h) {
        const int k = pairing[h];
        if (k < 0 || k >= h_count || k == h || pairing[k] != h)
            throw InvalidGraph("pairing is not a fixed-point-free involution");
        if (seen[h]) continue;
        seen[h] = seen[k] = true;
        paired_root.push_back(root[h]);
        paired_root.push_back(root[k]);
    }
    return HalfEdgeGraph(vertex_count, std::move(paired_root));
}

std::array<int, 2> HalfEdgeGraph::ends(int e) const {
    const int a = root_[2 * e];
    const int b = root_[2 * e + 1];
    return a <= b ? std::array<int, 2>{a, b} : std::array<int, 2>{b, a};
}

bool HalfEdgeGraph::connected() const {
    std::vector<int> parent(vertex_count_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = vertex_count_;
    for (int e = 0; e < edge_count(); ++e) {
        const int a = find(root_[2 * e]);
        const int b = find(root_[2 * e + 1]);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

StableGraph make_graph(std::vector<int> weights, const std::vector<std::array<int, 2>>& edges,
                       std::vector<int> markings) {
    const int v_count = static_cast<int>(weights.size());
    std::vector<int> root;
    root.reserve(2 * edges.size());
    for (const auto& [a, b] : edges) {
        root.push_back(std::min(a, b));
        root.push_back(std::max(a, b));
    }
    StableGraph graph{HalfEdgeGraph(v_count, std::move(root)), std::move(weights),
                      std::move(markings)};
    for (int w : graph.weights) {
        if (w < 0) throw InvalidGraph("negative vertex weight");
    }
    for (int m : graph.markings) {
        if (m < 0 || m >= v_count) throw InvalidGraph("marking on a missing vertex");
    }
    if (!graph.topology.connected()) throw InvalidGraph("graph is not connected");
    return graph;
}

std::vector<std::array<int, 2>> edge_list(const StableGraph& graph) {
    std::vector<std::array<int, 2>> out;
    out.reserve(graph.edge_count());
    for (int e = 0; e < graph.edge_count(); ++e) out.push_back(graph.ends(e));
    return out;
}

int betti_number(const StableGraph& graph) {
    return graph.edge_count() - graph.vertex_count() + 1;
}

int genus(const StableGraph& graph) {
    return betti_number(graph) + std::accumulate(graph.weights.begin(), graph.weights.end(), 0);
}

int valence(const StableGraph& graph, int v) {
    return static_cast<int>(std::count(graph.topology.roots().begin(),
                                       graph.topology.roots().end(), v));
}

int marking_count_at(const StableGraph& graph, int v) {
    return static_cast<int>(std::count(graph.markings.begin(), graph.markings.end(), v));
}

int legs(const StableGraph& graph, int v) {
    return valence(graph, v) + marking_count_at(graph, v);
}

int loop_count(const StableGraph& graph, int v) {
    int count = 0;
    for (int e = 0; e < graph.edge_count(); ++e) {
        if (graph.is_loop(e) && graph.ends(e)[0] == v) ++count;
    }
    return count;
}

bool is_stable(const StableGraph& graph) {
    for (int v = 0; v < graph.vertex_count(); ++v) {
        if (2 * graph.weights[v] - 2 + legs(graph, v) <= 0) return false;
    }
    return 3 * genus(graph) - 3 + graph.marking_count() > 0;
}

void validate(const StableGraph& graph, int g, int n) {
    if (genus(graph) != g || graph.marking_count() != n) {
        throw GenusMismatch("graph has (g, n) = (" + std::to_string(genus(graph)) + ", " +
                            std::to_string(graph.marking_count()) + "), expected (" +
                            std::to_string(g) + ", " + std::to_string(n) + ")");
    }
    for (int v = 0; v < graph.vertex_count(); ++v) {
        if (2 * graph.weights[v] - 2 + legs(graph, v) <= 0)
            throw UnstableGraph("vertex " + std::to_string(v) + " is unstable");
    }
    if (3 * g - 3 + n <= 0) throw UnstableGraph("(g, n) is not in the stable range");
}

bool is_bridge(const StableGraph& graph, int e) {
    if (graph.is_loop(e)) return false;
    std::vector<int> root;
    for (int f = 0; f < graph.edge_count(); ++f) {
        if (f == e) continue;
        root.push_back(graph.topology.root(2 * f));
        root.push_back(graph.topology.root(2 * f + 1));
    }
    return !HalfEdgeGraph(graph.vertex_count(), std::move(root)).connected();
}

bool is_g0_bridge(const StableGraph& graph, int e) {
    if (graph.is_loop(e)) return false;
    std::vector<int> others;
    for (int f = 0; f < graph.edge_count(); ++f) {
        if (f != e) others.push_back(f);
    }
    const Contraction c = contract_edges(graph, others);
    if (c.graph.vertex_count() != 2) return false;
    const int g = genus(graph);
    const auto& w = c.graph.weights;
    return (w[0] == g && w[1] == 0) || (w[0] == 0 && w[1] == g);
}

Contraction contract(const StableGraph& graph, int e) {
    const auto [a, b] = graph.ends(e);
    const int v_count = graph.vertex_count();
    Contraction out;
    out.vertex_map.resize(v_count);
    std::vector<int> weights;
    if (a == b) {
        std::iota(out.vertex_map.begin(), out.vertex_map.end(), 0);
        weights = graph.weights;
        ++weights[a];
    } else {
        for (int v = 0; v < v_count; ++v) {
            out.vertex_map[v] = v == b ? a : (v > b ? v - 1 : v);
        }
        weights.assign(v_count - 1, 0);
        for (int v = 0; v < v_count; ++v) weights[out.vertex_map[v]] += graph.weights[v];
    }
    std::vector<int> root;
    root.reserve(2 * (graph.edge_count() - 1));
    out.edge_map.resize(graph.edge_count());
    for (int f = 0; f < graph.edge_count(); ++f) {
        if (f == e) {
            out.edge_map[f] = -1;
            continue;
        }
        out.edge_map[f] = f > e ? f - 1 : f;
        const int x = out.vertex_map[graph.topology.root(2 * f)];
        const int y = out.vertex_map[graph.topology.root(2 * f + 1)];
        root.push_back(std::min(x, y));
        root.push_back(std::max(x, y));
    }
    std::vector<int> markings(graph.markings.size());
    for (std::size_t i = 0; i < markings.size(); ++i) markings[i] = out.vertex_map[graph.markings[i]];
    out.graph = StableGraph{HalfEdgeGraph(static_cast<int>(weights.size()), std::move(root)),
                            std::move(weights), std::move(markings)};
    return out;
}

Contraction contract_edges(const StableGraph& graph, const std::vector<int>& edges) {
    std::vector<int> order = edges;
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    Contraction out;
    out.graph = graph;
    out.edge_map.resize(graph.edge_count());
    std::iota(out.edge_map.begin(), out.edge_map.end(), 0);
    out.vertex_map.resize(graph.vertex_count());
    std::iota(out.vertex_map.begin(), out.vertex_map.end(), 0);
    // Descending order keeps the current ids of the remaining edges valid.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int current = out.edge_map[*it];
        Contraction step = contract(out.graph, current);
        for (int& m : out.edge_map) {
            if (m >= 0) m = step.edge_map[m];
        }
        for (int& v : out.vertex_map) v = step.vertex_map[v];
        out.graph = std::move(step.graph);
    }
    return out;
}

namespace {

bool forms_cycle(const StableGraph& graph, const std::vector<int>& subset) {
    std::vector<int> degree(graph.vertex_count(), 0);
    std::vector<int> parent(graph.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int merges = 0;
    for (int e : subset) {
        const auto [a, b] = graph.ends(e);
        ++degree[a];
        ++degree[b];
        const int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            ++merges;
        }
    }
    int touched = 0;
    for (int d : degree) {
        if (d == 0) continue;
        if (d != 2) return false;
        ++touched;
    }
    return touched == static_cast<int>(subset.size()) && merges == touched - 1;
}

void choose(const std::vector<int>& pool, int k, std::size_t start, std::vector<int>& current,
            const StableGraph& graph, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == k) {
        if (forms_cycle(graph, current)) out.push_back(current);
        return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
        current.push_back(pool[i]);
        choose(pool, k, i + 1, current, graph, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> k_cycles(const StableGraph& graph, int k) {
    std::vector<std::vector<int>> out;
    if (k < 1) return out;
    if (k == 1) {
        for (int e = 0; e < graph.edge_count(); ++e) {
            if (graph.is_loop(e)) out.push_back({e});
        }
        return out;
    }
    std::vector<int> pool;
    for (int e = 0; e < graph.edge_count(); ++e) {
        if (!graph.is_loop(e)) pool.push_back(e);
    }
    std::vector<int> current;
    choose(pool, k, 0, current, graph, out);
    return out;
}

int LabelledPair::edge_with_label(int label) const {
    for (int e = 0; e < static_cast<int>(labels.size()); ++e) {
        if (labels[e] == label) return e;
    }
    throw InvalidLabelling("no edge carries label " + std::to_string(label));
}

LabelledPair make_pair(StableGraph graph, std::vector<int> labels) {
    const int m = graph.edge_count();
    if (static_cast<int>(labels.size()) != m) throw InvalidLabelling("labelling size mismatch");
    std::vector<bool> used(m, false);
    for (int x : labels) {
        if (x < 0 || x >= m || used[x]) throw InvalidLabelling("labelling is not a bijection");
        used[x] = true;
    }
    return LabelledPair{std::move(graph), std::move(labels)};
}

LabelledPair identity_labelled(StableGraph graph) {
    std::vector<int> labels(graph.edge_count());
    std::iota(labels.begin(), labels.end(), 0);
    return LabelledPair{std::move(graph), std::move(labels)};
}

LabelledPair face(const LabelledPair& pair, int label) {
    const int e = pair.edge_with_label(label);
    Contraction c = contract(pair.graph, e);
    std::vector<int> labels(c.graph.edge_count());
    for (int f = 0; f < pair.graph.edge_count(); ++f) {
        if (f != e) labels[c.edge_map[f]] = collapse(label, pair.labels[f]);
    }
    return LabelledPair{std::move(c.graph), std::move(labels)};
}

LabelledPair contract_labels(const LabelledPair& pair, const std::vector<int>& labels) {
    std::vector<int> edges;
    edges.reserve(labels.size());
    for (int x : labels) edges.push_back(pair.edge_with_label(x));
    Contraction c = contract_edges(pair.graph, edges);
    std::vector<int> survivors;
    for (int f = 0; f < pair.graph.edge_count(); ++f) {
        if (c.edge_map[f] >= 0) survivors.push_back(pair.labels[f]);
    }
    std::vector<int> sorted = survivors;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out(c.graph.edge_count());
    for (int f = 0; f < pair.graph.edge_count(); ++f) {
        if (c.edge_map[f] < 0) continue;
        out[c.edge_map[f]] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), pair.labels[f]) - sorted.begin());
    }
    return LabelledPair{std::move(c.graph), std::move(out)};
}

LabelledPair relabel(const LabelledPair& pair, const std::vector<int>& a) {
    std::vector<int> labels(pair.labels.size());
    for (std::size_t e = 0; e < labels.size(); ++e) labels[e] = a[pair.labels[e]];
    return make_pair(pair.graph, std::move(labels));
}

std::vector<std::vector<int>> k_cycle_labels(const LabelledPair& pair, int k) {
    std::vector<std::vector<int>> out;
    for (const auto& cycle : k_cycles(pair.graph, k)) {
        std::vector<int> labels;
        for (int e : cycle) labels.push_back(pair.labels[e]);
        std::sort(labels.begin(), labels.end());
        out.push_back(std::move(labels));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tropdelta
