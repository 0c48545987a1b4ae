#include "tropdelta/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tropdelta/errors.hpp"

namespace tropdelta {

namespace {

constexpr int kMaxByte = 255;

unsigned char byte(int value) {
    if (value < 0 || value > kMaxByte) throw InvalidArgument("value does not fit a certificate byte");
    return static_cast<unsigned char>(value);
}

struct Search {
    const StableGraph& graph;
    IsoMode mode;
    int n;
    std::vector<int> adj;  // n * n multiplicities, loops on the diagonal
    std::vector<std::vector<int>> marks;
    bool collect;

    std::string best;
    std::vector<int> best_order;
    std::vector<std::vector<int>> optimal_orders;

    Search(const StableGraph& g, IsoMode m, bool collect_all)
        : graph(g), mode(m), n(g.vertex_count()), adj(n * n, 0), marks(n), collect(collect_all) {
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto [a, b] = g.ends(e);
            ++adj[a * n + b];
            if (a != b) ++adj[b * n + a];
        }
        if (mode == IsoMode::full) {
            for (int i = 0; i < g.marking_count(); ++i) marks[g.markings[i]].push_back(i);
        }
    }

    int count_colours(const std::vector<int>& colour) const {
        return *std::max_element(colour.begin(), colour.end()) + 1;
    }

    // Ranks vertices by signature; returns the number of distinct colours.
    int rank(const std::vector<std::vector<int>>& signature, std::vector<int>& colour) const {
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(),
                  [&](int x, int y) { return signature[x] < signature[y]; });
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && signature[idx[i]] != signature[idx[i - 1]]) ++c;
            colour[idx[i]] = c;
        }
        return c + 1;
    }

    std::vector<int> initial_colours() const {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v] = {graph.weights[v], adj[v * n + v], valence(graph, v),
                      static_cast<int>(marks[v].size())};
            sig[v].insert(sig[v].end(), marks[v].begin(), marks[v].end());
        }
        std::vector<int> colour(n);
        rank(sig, colour);
        return colour;
    }

    void refine(std::vector<int>& colour) const {
        int current = count_colours(colour);
        std::vector<std::vector<int>> sig(n);
        std::vector<std::pair<int, int>> nbrs;
        while (current < n) {
            for (int v = 0; v < n; ++v) {
                nbrs.clear();
                for (int u = 0; u < n; ++u) {
                    if (u != v && adj[v * n + u] > 0) nbrs.emplace_back(colour[u], adj[v * n + u]);
                }
                std::sort(nbrs.begin(), nbrs.end());
                auto& s = sig[v];
                s.clear();
                s.push_back(colour[v]);
                for (const auto& [c, m] : nbrs) {
                    s.push_back(c);
                    s.push_back(m);
                }
            }
            const int next = rank(sig, colour);
            if (next == current) break;
            current = next;
        }
    }

    std::string encode(const std::vector<int>& order) const {
        std::string code;
        code.reserve(1 + 4 * n + n * (n + 1) / 2 + graph.marking_count());
        code.push_back(static_cast<char>(byte(n)));
        for (int v : order) {
            code.push_back(static_cast<char>(byte(graph.weights[v])));
            code.push_back(static_cast<char>(byte(adj[v * n + v])));
            if (mode == IsoMode::full) {
                code.push_back(static_cast<char>(byte(static_cast<int>(marks[v].size()))));
                for (int m : marks[v]) code.push_back(static_cast<char>(byte(m)));
            }
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                code.push_back(static_cast<char>(byte(adj[order[i] * n + order[j]])));
            }
        }
        return code;
    }

    void explore(std::vector<int> colour) {
        refine(colour);
        const int colours = count_colours(colour);
        if (colours == n) {
            std::vector<int> order(n);
            for (int v = 0; v < n; ++v) order[colour[v]] = v;
            std::string code = encode(order);
            if (best_order.empty() || code < best) {
                best = std::move(code);
                best_order = order;
                optimal_orders.clear();
                if (collect) optimal_orders.push_back(std::move(order));
            } else if (collect && code == best) {
                optimal_orders.push_back(std::move(order));
            }
            return;
        }
        std::vector<int> size(colours, 0);
        for (int c : colour) ++size[c];
        int target = 0;
        while (size[target] == 1) ++target;
        for (int v = 0; v < n; ++v) {
            if (colour[v] != target) continue;
            std::vector<int> next(n);
            for (int u = 0; u < n; ++u) {
                const bool shift = colour[u] > target || (colour[u] == target && u != v);
                next[u] = colour[u] + (shift ? 1 : 0);
            }
            explore(std::move(next));
        }
    }

    void run() { explore(initial_colours()); }
};

}  // namespace

std::string to_hex(const Certificate& certificate) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(2 * certificate.size());
    for (unsigned char c : certificate) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

Certificate from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0) throw InvalidArgument("hex certificate has odd length");
    auto nibble = [](char c) {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw InvalidArgument("certificate is not lowercase hex");
    };
    Certificate out;
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        out.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
    }
    return out;
}

CanonicalForm canonical_form(const StableGraph& graph, IsoMode mode) {
    Search search(graph, mode, false);
    search.run();
    CanonicalForm out;
    out.certificate = std::move(search.best);
    out.order = std::move(search.best_order);
    out.position.resize(out.order.size());
    for (std::size_t i = 0; i < out.order.size(); ++i) out.position[out.order[i]] = static_cast<int>(i);
    return out;
}

Certificate certificate(const StableGraph& graph, IsoMode mode) {
    return canonical_form(graph, mode).certificate;
}

CanonicalGraph canonical_graph(const StableGraph& graph) {
    CanonicalForm form = canonical_form(graph, IsoMode::full);
    const int n = graph.vertex_count();
    std::vector<std::array<int, 2>> bundles;
    bundles.reserve(graph.edge_count());
    for (int e = 0; e < graph.edge_count(); ++e) {
        const auto [a, b] = graph.ends(e);
        const int x = form.position[a], y = form.position[b];
        bundles.push_back({std::min(x, y), std::max(x, y)});
    }
    std::vector<std::array<int, 2>> rep_edges = bundles;
    std::sort(rep_edges.begin(), rep_edges.end());
    std::vector<int> edge_map(graph.edge_count());
    std::vector<bool> used(rep_edges.size(), false);
    for (int e = 0; e < graph.edge_count(); ++e) {
        auto it = std::lower_bound(rep_edges.begin(), rep_edges.end(), bundles[e]);
        auto slot = static_cast<std::size_t>(it - rep_edges.begin());
        while (used[slot]) ++slot;
        used[slot] = true;
        edge_map[e] = static_cast<int>(slot);
    }
    std::vector<int> weights(n);
    for (int v = 0; v < n; ++v) weights[form.position[v]] = graph.weights[v];
    std::vector<int> markings(graph.markings.size());
    for (std::size_t i = 0; i < markings.size(); ++i) markings[i] = form.position[graph.markings[i]];
    std::vector<int> root;
    root.reserve(2 * rep_edges.size());
    for (const auto& [a, b] : rep_edges) {
        root.push_back(a);
        root.push_back(b);
    }
    return CanonicalGraph{
        StableGraph{HalfEdgeGraph(n, std::move(root)), std::move(weights), std::move(markings)},
        std::move(edge_map), std::move(form.certificate)};
}

bool isomorphic(const StableGraph& a, const StableGraph& b, IsoMode mode) {
    return certificate(a, mode) == certificate(b, mode);
}

std::optional<std::vector<int>> edge_isomorphism(const StableGraph& a, const StableGraph& b) {
    const CanonicalGraph ca = canonical_graph(a);
    const CanonicalGraph cb = canonical_graph(b);
    if (ca.certificate != cb.certificate) return std::nullopt;
    std::vector<int> inverse_b(cb.edge_map.size());
    for (std::size_t e = 0; e < cb.edge_map.size(); ++e) inverse_b[cb.edge_map[e]] = static_cast<int>(e);
    std::vector<int> out(ca.edge_map.size());
    for (std::size_t e = 0; e < out.size(); ++e) out[e] = inverse_b[ca.edge_map[e]];
    return out;
}

std::vector<std::vector<int>> vertex_automorphisms(const StableGraph& graph, IsoMode mode) {
    Search search(graph, mode, true);
    search.run();
    const int n = graph.vertex_count();
    std::vector<std::vector<int>> out;
    for (const auto& order : search.optimal_orders) {
        std::vector<int> pi(n);
        for (int i = 0; i < n; ++i) pi[search.best_order[i]] = order[i];
        out.push_back(std::move(pi));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

using Bundle = std::array<int, 2>;

void extend_edge_maps(const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pairs,
                      std::size_t index, std::vector<int>& current,
                      std::set<std::vector<int>>& out) {
    if (index == pairs.size()) {
        out.insert(current);
        return;
    }
    const auto& [source, target] = pairs[index];
    std::vector<int> perm = target;
    std::sort(perm.begin(), perm.end());
    do {
        for (std::size_t i = 0; i < source.size(); ++i) current[source[i]] = perm[i];
        extend_edge_maps(pairs, index + 1, current, out);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

std::vector<std::vector<int>> edge_automorphisms(const StableGraph& graph) {
    std::map<Bundle, std::vector<int>> bundles;
    for (int e = 0; e < graph.edge_count(); ++e) bundles[graph.ends(e)].push_back(e);
    std::set<std::vector<int>> out;
    std::vector<int> current(graph.edge_count(), -1);
    for (const auto& pi : vertex_automorphisms(graph, IsoMode::full)) {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
        for (const auto& [key, edges] : bundles) {
            const int x = pi[key[0]], y = pi[key[1]];
            pairs.emplace_back(edges, bundles.at({std::min(x, y), std::max(x, y)}));
        }
        extend_edge_maps(pairs, 0, current, out);
    }
    return {out.begin(), out.end()};
}

Certificate pair_certificate(const LabelledPair& pair, IsoMode mode) {
    const StableGraph& graph = pair.graph;
    const int n = graph.vertex_count();
    std::vector<std::vector<int>> descriptor(n);
    for (int v = 0; v < n; ++v) descriptor[v].push_back(graph.weights[v]);
    if (mode == IsoMode::full) {
        std::vector<std::vector<int>> marks(n);
        for (int i = 0; i < graph.marking_count(); ++i) marks[graph.markings[i]].push_back(i);
        for (int v = 0; v < n; ++v) {
            descriptor[v].push_back(static_cast<int>(marks[v].size()));
            descriptor[v].insert(descriptor[v].end(), marks[v].begin(), marks[v].end());
        }
    }
    std::vector<std::vector<int>> incident(n);
    for (int h = 0; h < graph.topology.half_edge_count(); ++h) {
        incident[graph.topology.root(h)].push_back(pair.labels[h / 2]);
    }
    for (int v = 0; v < n; ++v) {
        std::sort(incident[v].begin(), incident[v].end());
        descriptor[v].push_back(static_cast<int>(incident[v].size()));
        descriptor[v].insert(descriptor[v].end(), incident[v].begin(), incident[v].end());
    }
    std::sort(descriptor.begin(), descriptor.end());
    Certificate out;
    out.push_back(static_cast<char>(byte(n)));
    for (const auto& d : descriptor) {
        for (int x : d) out.push_back(static_cast<char>(byte(x)));
    }
    return out;
}

bool pair_isomorphic(const LabelledPair& a, const LabelledPair& b, IsoMode mode) {
    return pair_certificate(a, mode) == pair_certificate(b, mode);
}

}  // namespace tropdelta
