#include "tropdelta/enumeration.hpp"

#include <algorithm>
#include <map>

#include "tropdelta/errors.hpp"

namespace tropdelta {

namespace {

using LevelMap = std::unordered_map<Certificate, StableGraph>;

void check_range(int g, int n) {
    if (g < 0 || n < 0 || 3 * g - 3 + n <= 0) throw InvalidArgument("(g, n) is not in the stable range");
}

void insert_canonical(LevelMap& level, const StableGraph& graph) {
    CanonicalGraph c = canonical_graph(graph);
    level.try_emplace(std::move(c.certificate), std::move(c.graph));
}

std::vector<StableGraph> sorted_graphs(LevelMap& level) {
    std::vector<std::pair<Certificate, StableGraph>> items;
    items.reserve(level.size());
    for (auto& [cert, graph] : level) items.emplace_back(cert, std::move(graph));
    level.clear();
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<StableGraph> out;
    out.reserve(items.size());
    for (auto& item : items) out.push_back(std::move(item.second));
    return out;
}

void cubic_graphs(int v_count, int i, int j, std::vector<int>& remaining,
                  std::vector<std::array<int, 2>>& edges, LevelMap& out) {
    if (i == v_count) {
        try {
            insert_canonical(out, make_graph(std::vector<int>(v_count, 0), edges, {}));
        } catch (const InvalidGraph&) {
            // disconnected
        }
        return;
    }
    if (remaining[i] == 0) {
        cubic_graphs(v_count, i + 1, i + 1, remaining, edges, out);
        return;
    }
    if (j == v_count) return;
    if (j == i) {
        for (int loops = 0; 2 * loops <= remaining[i]; ++loops) {
            remaining[i] -= 2 * loops;
            for (int k = 0; k < loops; ++k) edges.push_back({i, i});
            cubic_graphs(v_count, i, i + 1, remaining, edges, out);
            edges.resize(edges.size() - loops);
            remaining[i] += 2 * loops;
        }
        return;
    }
    const int most = std::min(remaining[i], remaining[j]);
    for (int m = 0; m <= most; ++m) {
        remaining[i] -= m;
        remaining[j] -= m;
        for (int k = 0; k < m; ++k) edges.push_back({i, j});
        cubic_graphs(v_count, i, j + 1, remaining, edges, out);
        edges.resize(edges.size() - m);
        remaining[i] += m;
        remaining[j] += m;
    }
}

// Adds marking with index graph.marking_count() in every trivalent position.
void insert_marking(const StableGraph& graph, LevelMap& out) {
    const int x = graph.vertex_count();
    const auto edges = edge_list(graph);
    std::vector<int> weights = graph.weights;
    weights.push_back(0);
    for (int e = 0; e < graph.edge_count(); ++e) {
        auto next = edges;
        next[e] = {edges[e][0], x};
        next.push_back({x, edges[e][1]});
        std::vector<int> markings = graph.markings;
        markings.push_back(x);
        insert_canonical(out, make_graph(weights, next, std::move(markings)));
    }
    for (int i = 0; i < graph.marking_count(); ++i) {
        auto next = edges;
        next.push_back({graph.markings[i], x});
        std::vector<int> markings = graph.markings;
        markings[i] = x;
        markings.push_back(x);
        insert_canonical(out, make_graph(weights, next, std::move(markings)));
    }
}

StableGraph point_graph(int g, int n) {
    return make_graph({g}, {}, std::vector<int>(n, 0));
}

// Every nonloop uncontraction at every vertex, plus loop uncontractions of weight.
void uncontractions(const StableGraph& graph, LevelMap& out) {
    const int v_count = graph.vertex_count();
    const auto& root = graph.topology.roots();
    for (int v = 0; v < v_count; ++v) {
        const int w = graph.weights[v];
        if (w > 0) {
            auto edges = edge_list(graph);
            edges.push_back({v, v});
            std::vector<int> weights = graph.weights;
            --weights[v];
            insert_canonical(out, make_graph(std::move(weights), edges, graph.markings));
        }
        std::vector<int> half_edges, marks;
        for (int h = 0; h < static_cast<int>(root.size()); ++h) {
            if (root[h] == v) half_edges.push_back(h);
        }
        for (int i = 0; i < graph.marking_count(); ++i) {
            if (graph.markings[i] == v) marks.push_back(i);
        }
        const int leg_count = static_cast<int>(half_edges.size() + marks.size());
        const std::uint32_t masks = leg_count == 0 ? 1u : 1u << (leg_count - 1);
        // Leg 0 stays on side 0; both weight orders are tried.
        for (std::uint32_t mask = 0; mask < masks; ++mask) {
            const std::uint32_t side = mask << 1;
            const int ones = __builtin_popcount(side);
            const int zeros = leg_count - ones;
            for (int w1 = 0; w1 <= w; ++w1) {
                const int w2 = w - w1;
                if (2 * w1 + zeros < 2 || 2 * w2 + ones < 2) continue;
                std::vector<int> new_root = root;
                std::vector<int> markings = graph.markings;
                for (int k = 0; k < leg_count; ++k) {
                    if (!(side >> k & 1u)) continue;
                    if (k < static_cast<int>(half_edges.size())) {
                        new_root[half_edges[k]] = v_count;
                    } else {
                        markings[marks[k - half_edges.size()]] = v_count;
                    }
                }
                std::vector<std::array<int, 2>> edges;
                edges.reserve(new_root.size() / 2 + 1);
                for (std::size_t h = 0; h < new_root.size(); h += 2) edges.push_back({new_root[h], new_root[h + 1]});
                edges.push_back({v, v_count});
                std::vector<int> weights = graph.weights;
                weights[v] = w1;
                weights.push_back(w2);
                insert_canonical(out, make_graph(std::move(weights), edges, std::move(markings)));
            }
        }
    }
}

struct ParentInfo {
    // min_parent_vertices[m][i]: fewest vertices among classes with m + 1 edges contracting
    // onto class i with m edges; INT_MAX when there is none.
    std::vector<std::vector<int>> min_parent_vertices;
};

Skeleton closure(int g, int n, std::vector<StableGraph> facets, ParentInfo* parents) {
    const int top = 3 * g - 3 + n;
    std::vector<std::vector<StableGraph>> levels(top + 1);
    levels[top] = std::move(facets);
    for (int m = top; m > 0; --m) {
        LevelMap next;
        for (const auto& graph : levels[m]) {
            for (int e = 0; e < m; ++e) insert_canonical(next, contract(graph, e).graph);
        }
        levels[m - 1] = sorted_graphs(next);
    }
    Skeleton skeleton(g, n, std::move(levels));
    if (parents) {
        parents->min_parent_vertices.assign(top + 1, {});
        for (int m = 0; m <= top; ++m) {
            parents->min_parent_vertices[m].assign(skeleton.with_edges(m).size(), INT32_MAX);
        }
        for (int m = top; m > 0; --m) {
            for (const auto& graph : skeleton.with_edges(m)) {
                for (int e = 0; e < m; ++e) {
                    const int t = skeleton.index_of(contract(graph, e).graph);
                    int& slot = parents->min_parent_vertices[m - 1][t];
                    slot = std::min(slot, graph.vertex_count());
                }
            }
        }
    }
    return skeleton;
}

}  // namespace

Skeleton::Skeleton(int g, int n, std::vector<std::vector<StableGraph>> by_edges)
    : g_(g), n_(n), by_edges_(std::move(by_edges)) {
    certificates_.resize(by_edges_.size());
    index_.resize(by_edges_.size());
    for (std::size_t m = 0; m < by_edges_.size(); ++m) {
        auto& certs = certificates_[m];
        certs.reserve(by_edges_[m].size());
        for (const auto& graph : by_edges_[m]) certs.push_back(certificate(graph));
        index_[m].reserve(certs.size());
        for (std::size_t i = 0; i < certs.size(); ++i) index_[m].emplace(certs[i], static_cast<int>(i));
    }
}

std::size_t Skeleton::size() const {
    std::size_t total = 0;
    for (const auto& level : by_edges_) total += level.size();
    return total;
}

int Skeleton::index_of(const Certificate& certificate, int edges) const {
    if (edges < 0 || edges >= static_cast<int>(index_.size())) return -1;
    auto it = index_[edges].find(certificate);
    return it == index_[edges].end() ? -1 : it->second;
}

int Skeleton::index_of(const StableGraph& graph) const {
    return index_of(certificate(graph), graph.edge_count());
}

std::vector<StableGraph> enumerate_facets(int g, int n) {
    check_range(g, n);
    LevelMap current;
    int start = 0;
    if (g == 0) {
        insert_canonical(current, point_graph(0, 3));
        start = 3;
    } else if (g == 1) {
        insert_canonical(current, make_graph({0}, {{0, 0}}, {0}));
        start = 1;
    } else {
        std::vector<int> remaining(2 * g - 2, 3);
        std::vector<std::array<int, 2>> edges;
        cubic_graphs(2 * g - 2, 0, 0, remaining, edges, current);
    }
    for (int k = start; k < n; ++k) {
        LevelMap next;
        for (const auto& [cert, graph] : current) insert_marking(graph, next);
        current = std::move(next);
    }
    return sorted_graphs(current);
}

Skeleton enumerate_all(int g, int n) {
    return closure(g, n, enumerate_facets(g, n), nullptr);
}

Skeleton enumerate_by_uncontraction(int g, int n) {
    check_range(g, n);
    const int top = 3 * g - 3 + n;
    std::vector<std::vector<StableGraph>> levels(top + 1);
    levels[0] = {canonical_graph(point_graph(g, n)).graph};
    for (int m = 1; m <= top; ++m) {
        LevelMap next;
        for (const auto& graph : levels[m - 1]) uncontractions(graph, next);
        levels[m] = sorted_graphs(next);
    }
    return Skeleton(g, n, std::move(levels));
}

std::uint64_t count_edge_labelled(const StableGraph& graph) {
    std::uint64_t factorial = 1;
    for (int k = 2; k <= graph.edge_count(); ++k) factorial *= static_cast<std::uint64_t>(k);
    return factorial / edge_automorphisms(graph).size();
}

PurityReport check_purity(int g, int n) {
    PurityReport report;
    report.g = g;
    report.n = n;
    ParentInfo parents;
    const Skeleton down = closure(g, n, enumerate_facets(g, n), &parents);
    const Skeleton up = enumerate_by_uncontraction(g, n);
    report.classes = down.size();
    const int top = 3 * g - 3 + n;

    report.closure_matches = up.max_edges() == down.max_edges();
    for (int m = 0; report.closure_matches && m <= top; ++m) {
        if (up.certificates(m) != down.certificates(m)) {
            report.closure_matches = false;
            report.witness = "class sets differ at " + std::to_string(m) + " edges";
        }
    }

    report.pure = true;
    const int max_vertices = 2 * g - 2 + n;
    report.v_pure.assign(max_vertices, true);
    for (int m = 0; m <= top; ++m) {
        const auto& level = down.with_edges(m);
        for (std::size_t k = 0; k < level.size(); ++k) {
            const int v = level[k].vertex_count();
            const int min_parent = parents.min_parent_vertices[m][k];
            if (min_parent == INT32_MAX && m != top) {
                report.pure = false;
                report.witness = "maximal class " + to_hex(down.certificates(m)[k]);
            }
            for (int i = v; i <= max_vertices; ++i) {
                const bool maximal_in_vi = min_parent > i;
                // Maximal simplices of V^i have dimension g + i - 2, i.e. g + i - 1 edges.
                if (maximal_in_vi && m != g + i - 1) {
                    report.v_pure[i - 1] = false;
                    report.witness = "V^" + std::to_string(i) + " maximal class " +
                                     to_hex(down.certificates(m)[k]);
                }
            }
        }
    }
    return report;
}

}  // namespace tropdelta
