#include "tropdelta/reconstruction.hpp"

#include <algorithm>
#include <set>

#include "tropdelta/canonical.hpp"
#include "tropdelta/errors.hpp"

namespace tropdelta {

Deck make_deck(const LabelledPair& pair) {
    Deck deck;
    deck.g = genus(pair.graph);
    deck.n = pair.graph.marking_count();
    deck.p = pair.p();
    for (int label = 0; label <= pair.p(); ++label) {
        if (pair.graph.is_loop(pair.edge_with_label(label))) continue;
        deck.entries.push_back(DeckEntry{label, face(pair, label)});
    }
    return deck;
}

CycleSet total_cycles(const LabelledPair& pair) {
    CycleSet out(pair.p() + 2);
    for (int k = 1; k <= pair.p() + 1; ++k) out[k] = k_cycle_labels(pair, k);
    return out;
}

namespace {

void subsets(const std::vector<int>& pool, int k, std::size_t start, std::vector<int>& current,
             std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == k) {
        out.push_back(current);
        return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
        current.push_back(pool[i]);
        subsets(pool, k, i + 1, current, out);
        current.pop_back();
    }
}

}  // namespace

CycleSet cycles_from_deck(const Deck& deck) {
    const int labels = deck.p + 1;
    CycleSet out(labels + 1);
    std::vector<int> nonloops;
    std::vector<bool> is_nonloop(labels, false);
    for (const auto& entry : deck.entries) {
        nonloops.push_back(entry.index);
        is_nonloop[entry.index] = true;
    }
    for (int x = 0; x < labels; ++x) {
        if (!is_nonloop[x]) out[1].push_back({x});
    }
    for (int k = 2; k <= labels; ++k) {
        // (k - 1)-cycles of each entry, keyed by entry position.
        std::vector<std::set<std::vector<int>>> lower;
        for (const auto& entry : deck.entries) {
            const auto cycles = k_cycle_labels(entry.pair, k - 1);
            lower.emplace_back(cycles.begin(), cycles.end());
        }
        std::vector<std::vector<int>> candidates;
        std::vector<int> current;
        subsets(nonloops, k, 0, current, candidates);
        for (const auto& s : candidates) {
            bool ok = true;
            for (std::size_t t = 0; ok && t < deck.entries.size(); ++t) {
                const int j = deck.entries[t].index;
                if (!std::binary_search(s.begin(), s.end(), j)) continue;
                std::vector<int> rest;
                for (int x : s) {
                    if (x != j) rest.push_back(collapse(j, x));
                }
                ok = lower[t].count(rest) > 0;
            }
            if (ok) out[k].push_back(s);
        }
    }
    return out;
}

IntersectionMatrix intersection_matrix(const LabelledPair& pair) {
    const int labels = pair.p() + 1;
    const int size = labels + pair.graph.marking_count();
    std::vector<std::array<int, 2>> ends(size);
    for (int e = 0; e < labels; ++e) ends[pair.labels[e]] = pair.graph.ends(e);
    for (int i = 0; i < pair.graph.marking_count(); ++i) {
        ends[labels + i] = {pair.graph.markings[i], pair.graph.markings[i]};
    }
    IntersectionMatrix q(size, std::vector<int>(size, 0));
    for (int a = 0; a < size; ++a) {
        for (int b = 0; b < size; ++b) {
            std::set<int> x(ends[a].begin(), ends[a].end());
            int shared = 0;
            for (int v : std::set<int>(ends[b].begin(), ends[b].end())) shared += static_cast<int>(x.count(v));
            q[a][b] = shared;
        }
    }
    return q;
}

std::string to_string(FullSubgraph shape) {
    switch (shape) {
        case FullSubgraph::none: return "none";
        case FullSubgraph::e0: return "E0";
        case FullSubgraph::e1: return "E1";
        case FullSubgraph::e2: return "E2";
        case FullSubgraph::e3: return "E3";
        case FullSubgraph::e4: return "E4";
        case FullSubgraph::t4: return "T4";
        case FullSubgraph::e5: return "E5";
        case FullSubgraph::e6: return "E6";
    }
    return "none";
}

namespace {

// Everything q_from_deck may ask about the hidden graph, answered from the deck.
class DeckView {
public:
    DeckView(const Deck& deck, const CycleSet& cycles)
        : deck_(deck), cycles_(cycles), labels_(deck.p + 1), size_(labels_ + deck.n),
          entry_of_(labels_, -1) {
        for (std::size_t t = 0; t < deck.entries.size(); ++t) {
            entry_of_[deck.entries[t].index] = static_cast<int>(t);
            entry_q_.push_back(intersection_matrix(deck.entries[t].pair));
        }
        for (int a = 0; a < size_; ++a) (nonloop(a) ? nonloops_ : loop_likes_).push_back(a);
        for (const auto& pair : cycles.size() > 2 ? cycles[2] : std::vector<std::vector<int>>{}) {
            parallel_.insert({pair[0], pair[1]});
        }
    }

    int labels() const { return labels_; }
    int size() const { return size_; }
    int vertices() const { return labels_ - deck_.g + 1; }
    bool nonloop(int a) const { return a < labels_ && entry_of_[a] >= 0; }
    const std::vector<int>& nonloops() const { return nonloops_; }
    /// Loops and markings.
    const std::vector<int>& loop_likes() const { return loop_likes_; }
    const CycleSet& cycles() const { return cycles_; }

    bool parallel(int a, int b) const {
        return parallel_.count({std::min(a, b), std::max(a, b)}) > 0;
    }
    int parallel_partner(int a) const {
        for (int b : nonloops_) {
            if (b != a && parallel(a, b)) return b;
        }
        return -1;
    }

    const LabelledPair& entry(int j) const { return deck_.entries[entry_of_[j]].pair; }
    int shift(int j, int a) const { return a < labels_ ? collapse(j, a) : a - 1; }
    /// <d_j a, d_j b> in G / e_j.
    int in_entry(int j, int a, int b) const {
        return entry_q_[entry_of_[j]][shift(j, a)][shift(j, b)];
    }

    /// min over nonloop j other than a and b of <d_j a, d_j b>.
    int generic(int a, int b) const {
        int best = -1;
        for (int j : nonloops_) {
            if (j == a || j == b) continue;
            const int value = in_entry(j, a, b);
            if (best < 0 || value < best) best = value;
        }
        if (best < 0) throw InternalInconsistency("no contraction available for the generic formula");
        return best;
    }

    /// Vertex of G / e_j carrying the image of a loop or marking.
    int vertex_in_entry(int j, int a) const {
        const LabelledPair& pair = entry(j);
        if (a >= labels_) return pair.graph.markings[a - labels_];
        return pair.graph.ends(pair.edge_with_label(collapse(j, a)))[0];
    }

    int legs_in_entry(int j, int a) const { return legs(entry(j).graph, vertex_in_entry(j, a)); }

    /// <a, j> for j meeting the loop or marking gamma, read off G / e_j.
    int corner(int j, int a, int gamma) const {
        if (a == j) return 2;
        const LabelledPair& pair = entry(j);
        const int u = vertex_in_entry(j, gamma);
        const auto ends = pair.graph.ends(pair.edge_with_label(collapse(j, a)));
        if (ends[0] == u && ends[1] == u) return 2;
        return ends[0] == u || ends[1] == u ? 1 : 0;
    }

    /// Every nonloop edge of G / e_j has the image of gamma as an endpoint.
    bool central_in_entry(int j, int gamma) const {
        const LabelledPair& pair = entry(j);
        const int u = vertex_in_entry(j, gamma);
        for (int e = 0; e < pair.graph.edge_count(); ++e) {
            const auto ends = pair.graph.ends(e);
            if (ends[0] != ends[1] && ends[0] != u && ends[1] != u) return false;
        }
        return true;
    }

    /// G / e_j has a loop whose vertex misses some nonloop edge.
    bool entry_has_peripheral_loop(int j) const {
        const StableGraph& graph = entry(j).graph;
        for (int e = 0; e < graph.edge_count(); ++e) {
            if (!graph.is_loop(e)) continue;
            const int u = graph.ends(e)[0];
            for (int f = 0; f < graph.edge_count(); ++f) {
                const auto ends = graph.ends(f);
                if (ends[0] != ends[1] && ends[0] != u && ends[1] != u) return true;
            }
        }
        return false;
    }

    bool common_cycle(int k, int a, int b) const {
        if (static_cast<int>(cycles_.size()) <= k) return false;
        for (const auto& c : cycles_[k]) {
            if (std::binary_search(c.begin(), c.end(), a) && std::binary_search(c.begin(), c.end(), b))
                return true;
        }
        return false;
    }
    bool has_cycles(int k) const {
        return static_cast<int>(cycles_.size()) > k && !cycles_[k].empty();
    }

private:
    const Deck& deck_;
    const CycleSet& cycles_;
    int labels_;
    int size_;
    std::vector<int> entry_of_;
    std::vector<IntersectionMatrix> entry_q_;
    std::vector<int> nonloops_;
    std::vector<int> loop_likes_;
    std::set<std::pair<int, int>> parallel_;
};

bool four_triangles_without_parallels(const DeckView& view, const std::vector<std::vector<int>>& triangles,
                                      std::size_t start, std::vector<int>& used, int chosen) {
    if (chosen == 4) return true;
    for (std::size_t t = start; t < triangles.size(); ++t) {
        bool clash = false;
        for (int x : triangles[t]) {
            for (int y : used) {
                if (x != y && view.parallel(x, y)) clash = true;
            }
        }
        if (clash) continue;
        const std::size_t before = used.size();
        used.insert(used.end(), triangles[t].begin(), triangles[t].end());
        if (four_triangles_without_parallels(view, triangles, t + 1, used, chosen + 1)) return true;
        used.resize(before);
    }
    return false;
}

// Number of parallel classes of nonloop edges meeting the loop or marking gamma.
int bundles_at(const DeckView& view, int gamma) {
    std::vector<int> reps;
    for (int j : view.nonloops()) {
        if (view.generic(gamma, j) < 1) continue;
        bool fresh = true;
        for (int r : reps) {
            if (view.parallel(r, j)) fresh = false;
        }
        if (fresh) reps.push_back(j);
    }
    return static_cast<int>(reps.size());
}

FullSubgraph classify(const DeckView& view) {
    const int v = view.vertices();
    if (v == 3) return view.has_cycles(3) ? FullSubgraph::e5 : FullSubgraph::e6;
    if (v != 4) return FullSubgraph::none;
    const bool three = view.has_cycles(3);
    const bool four = view.has_cycles(4);
    if (three && four) {
        std::vector<int> used;
        return four_triangles_without_parallels(view, view.cycles()[3], 0, used, 0) ? FullSubgraph::e0
                                                                                     : FullSubgraph::e1;
    }
    if (four) return FullSubgraph::e2;
    if (three) return FullSubgraph::e3;
    if (!view.loop_likes().empty()) {
        const int gamma = view.loop_likes().front();
        const int k = bundles_at(view, gamma);
        if (k >= 3) return FullSubgraph::t4;
        if (k == 2) return FullSubgraph::e4;
        for (int j : view.nonloops()) {
            if (view.central_in_entry(j, gamma)) return FullSubgraph::t4;
        }
        return FullSubgraph::e4;
    }
    for (int j : view.nonloops()) {
        if (view.entry_has_peripheral_loop(j)) return FullSubgraph::e4;
    }
    return FullSubgraph::t4;
}

// Exact <a, b> when a has a parallel partner or meets a loop or marking; -1 otherwise.
int exact_by_witness(const DeckView& view, int a, int b) {
    const int partner = view.parallel_partner(a);
    if (partner >= 0 && partner != b) return view.in_entry(partner, a, b) > 0 ? 1 : 0;
    for (int gamma : view.loop_likes()) {
        if (view.generic(gamma, a) >= 1) return view.corner(a, b, gamma) > 0 ? 1 : 0;
    }
    return -1;
}

int exact_either(const DeckView& view, int a, int b) {
    const int value = exact_by_witness(view, a, b);
    return value >= 0 ? value : exact_by_witness(view, b, a);
}

// Distinct nonparallel nonloop edges, |V| = 4.
int four_vertex_pair(const DeckView& view, FullSubgraph shape, int a, int b) {
    switch (shape) {
        case FullSubgraph::e0:
            return view.common_cycle(3, a, b) ? 1 : 0;
        case FullSubgraph::e1: {
            if (view.common_cycle(3, a, b)) return 1;
            const int value = exact_either(view, a, b);
            if (value >= 0) return value;
            // a and b lie on different triangles, off the diagonal. The other off-diagonal
            // edge a' of a's triangle meets b exactly when a does not.
            for (const auto& c : view.cycles()[3]) {
                if (!std::binary_search(c.begin(), c.end(), a)) continue;
                for (int x : c) {
                    if (x == a || view.common_cycle(3, x, b)) continue;
                    const int other = exact_either(view, x, b);
                    if (other >= 0) return 1 - other;
                }
            }
            throw InternalInconsistency("E1 pair without a usable witness");
        }
        case FullSubgraph::e2: {
            if (!view.loop_likes().empty()) {
                const int gamma = view.loop_likes().front();
                int j = -1, k = -1;
                for (int x : view.nonloops()) {
                    if (view.generic(gamma, x) != 1) continue;
                    if (j < 0) {
                        j = x;
                    } else if (!view.parallel(j, x)) {
                        k = x;
                        break;
                    }
                }
                if (k < 0) throw InternalInconsistency("E2 corner edges not found");
                auto side = [&](int x) {
                    return std::pair<int, int>{x == j ? 2 : view.corner(j, x, gamma),
                                               x == k ? 2 : view.corner(k, x, gamma)};
                };
                const auto sa = side(a), sb = side(b);
                using P = std::pair<int, int>;
                auto opposite = [](P x, P y, P u, P w) { return (x == u && y == w) || (x == w && y == u); };
                if (opposite(sa, sb, P{2, 1}, P{0, 1}) || opposite(sa, sb, P{1, 2}, P{1, 0})) return 0;
                return 1;
            }
            for (int x : {a, b}) {
                const int partner = view.parallel_partner(x);
                if (partner >= 0) return view.in_entry(partner, a, b) > 0 ? 1 : 0;
            }
            return 0;
        }
        case FullSubgraph::e3: {
            if (view.common_cycle(3, a, b)) return 1;
            int in_triangle = a, pendant = b;
            auto on_triangle = [&](int x) {
                for (const auto& c : view.cycles()[3]) {
                    if (std::binary_search(c.begin(), c.end(), x)) return true;
                }
                return false;
            };
            if (!on_triangle(in_triangle)) std::swap(in_triangle, pendant);
            if (!on_triangle(in_triangle) || on_triangle(pendant))
                throw InternalInconsistency("E3 pair is not triangle plus pendant");
            int witness = view.parallel_partner(pendant);
            if (witness < 0) {
                for (int gamma : view.loop_likes()) {
                    if (view.generic(pendant, gamma) >= 1) {
                        witness = gamma;
                        break;
                    }
                }
            }
            if (witness < 0) throw InternalInconsistency("E3 pendant edge has no witness");
            return view.in_entry(pendant, in_triangle, witness) > 0 ? 1 : 0;
        }
        case FullSubgraph::e4: {
            if (view.generic(a, b) == 0) return 0;
            // Only two end edges, each alone in its parallel class, can be disjoint here.
            auto is_end = [&](int x) {
                for (int gamma : view.loop_likes()) {
                    if (view.generic(gamma, x) < 1) continue;
                    bool only = true;
                    for (int y : view.nonloops()) {
                        if (y != x && !view.parallel(x, y) && view.generic(gamma, y) > 0) only = false;
                    }
                    if (only) return true;
                }
                return false;
            };
            return is_end(a) && is_end(b) ? 0 : 1;
        }
        default:
            return view.generic(a, b);
    }
}

// Nonloop a against a loop or marking b, |V| = 3.
int three_vertex_mixed(const DeckView& view, FullSubgraph shape, int a, int b) {
    if (shape == FullSubgraph::e5) {
        int lowest = -1;
        for (int j : view.nonloops()) {
            const int value = view.legs_in_entry(j, b);
            if (lowest < 0 || value < lowest) lowest = value;
        }
        return view.legs_in_entry(a, b) > lowest ? 1 : 0;
    }
    const int partner = view.parallel_partner(a);
    if (partner >= 0) return view.in_entry(partner, a, b) > 0 ? 1 : 0;
    for (const auto& two : view.cycles()[2]) {
        if (view.in_entry(two[1], two[0], b) == 0) return 1;
        break;
    }
    for (int gamma : view.loop_likes()) {
        if (gamma == b || view.generic(b, gamma) != 0) continue;
        if (view.in_entry(a, b, gamma) == 1) return 1;
    }
    return 0;
}

}  // namespace

FullSubgraph classify_full_subgraph(const Deck& deck, const CycleSet& cycles) {
    return classify(DeckView(deck, cycles));
}

bool detect_full_subgraph(const Deck& deck, const CycleSet& cycles, FullSubgraph which) {
    return classify_full_subgraph(deck, cycles) == which;
}

IntersectionMatrix q_from_deck(const Deck& deck, const CycleSet& cycles, QOptions options) {
    const DeckView view(deck, cycles);
    const int size = view.size();
    const int vertices = view.vertices();
    if (!options.generic_only && vertices < 3)
        throw InvalidArgument("the deck formula needs at least three vertices");
    IntersectionMatrix q(size, std::vector<int>(size, -1));
    for (int a = 0; a < size; ++a) q[a][a] = view.nonloop(a) ? 2 : 1;
    if (cycles.size() > 2) {
        for (const auto& two : cycles[2]) q[two[0]][two[1]] = q[two[1]][two[0]] = 2;
    }
    const FullSubgraph shape = options.generic_only ? FullSubgraph::none : classify(view);
    for (int a = 0; a < size; ++a) {
        for (int b = a + 1; b < size; ++b) {
            if (q[a][b] >= 0) continue;
            int value;
            const bool na = view.nonloop(a), nb = view.nonloop(b);
            if (options.generic_only || vertices >= 5 || (!na && !nb)) {
                value = view.generic(a, b);
            } else if (vertices == 4) {
                value = na && nb ? four_vertex_pair(view, shape, a, b) : view.generic(a, b);
            } else if (na && nb) {
                value = 1;
            } else {
                value = na ? three_vertex_mixed(view, shape, a, b) : three_vertex_mixed(view, shape, b, a);
            }
            q[a][b] = q[b][a] = value;
        }
    }
    for (int a = 0; a < size; ++a) {
        for (int b = 0; b < size; ++b) {
            if (q[a][b] != q[b][a] || q[a][b] < 0 || q[a][b] > 2)
                throw InternalInconsistency("deck matrix is not a symmetric {0,1,2} matrix");
        }
    }
    return q;
}

LabelledPair uncontract(const LabelledPair& pair, int j, const UncontractionSpec& spec) {
    const StableGraph& graph = pair.graph;
    const int v = spec.vertex;
    if (v < 0 || v >= graph.vertex_count()) throw InvalidArgument("uncontraction vertex out of range");
    const int labels = pair.p() + 1;
    if (j < 0 || j > labels) throw InvalidArgument("new label out of range");

    std::vector<int> nonloops, loops, marks;
    for (int e = 0; e < graph.edge_count(); ++e) {
        const auto ends = graph.ends(e);
        if (ends[0] != v && ends[1] != v) continue;
        (ends[0] == ends[1] ? loops : nonloops).push_back(pair.labels[e]);
    }
    for (int i = 0; i < graph.marking_count(); ++i) {
        if (graph.markings[i] == v) marks.push_back(i);
    }
    auto same_set = [](std::vector<int> whole, std::initializer_list<const std::vector<int>*> parts) {
        std::vector<int> joined;
        for (const auto* part : parts) joined.insert(joined.end(), part->begin(), part->end());
        std::sort(whole.begin(), whole.end());
        std::sort(joined.begin(), joined.end());
        return whole == joined;
    };
    if (!same_set(nonloops, {&spec.n1, &spec.n2}) || !same_set(marks, {&spec.i1, &spec.i2}) ||
        !same_set(loops, {&spec.l0, &spec.l1, &spec.l2}))
        throw InvalidArgument("uncontraction lists do not partition the vertex");
    if (spec.w1 < 0 || spec.w2 < 0 || spec.w1 + spec.w2 != graph.weights[v])
        throw InvalidArgument("uncontraction weights do not split the vertex weight");
    const int l0 = static_cast<int>(spec.l0.size());
    auto side_legs = [&](const std::vector<int>& n_side, const std::vector<int>& l_side,
                         const std::vector<int>& i_side, int w) {
        return static_cast<int>(n_side.size() + 2 * l_side.size() + i_side.size()) + l0 + 1 + 2 * w;
    };
    if (side_legs(spec.n1, spec.l1, spec.i1, spec.w1) < 3 || side_legs(spec.n2, spec.l2, spec.i2, spec.w2) < 3)
        throw UnstableGraph("uncontraction produces an unstable vertex");

    const int v2 = graph.vertex_count();
    auto in = [](const std::vector<int>& list, int x) {
        return std::find(list.begin(), list.end(), x) != list.end();
    };
    std::vector<std::array<int, 2>> edges;
    std::vector<int> new_labels;
    for (int e = 0; e < graph.edge_count(); ++e) {
        auto ends = graph.ends(e);
        const int label = pair.labels[e];
        if (ends[0] == v && ends[1] == v) {
            if (in(spec.l0, label)) ends = {v, v2};
            else if (in(spec.l2, label)) ends = {v2, v2};
        } else if (in(spec.n2, label)) {
            if (ends[0] == v) ends[0] = v2;
            else ends[1] = v2;
        }
        edges.push_back(ends);
        new_labels.push_back(expand(j, label));
    }
    edges.push_back({v, v2});
    new_labels.push_back(j);
    std::vector<int> weights = graph.weights;
    weights[v] = spec.w1;
    weights.push_back(spec.w2);
    std::vector<int> markings = graph.markings;
    for (int i : spec.i2) markings[i] = v2;
    return make_pair(make_graph(std::move(weights), edges, std::move(markings)), std::move(new_labels));
}

namespace {

struct Split {
    std::vector<int> nonloops, marks, loops;
};

template <typename Visit>
void for_each_spec(const Split& split, int vertex, int weight, Visit&& visit) {
    const std::size_t nn = split.nonloops.size(), ni = split.marks.size(), nl = split.loops.size();
    std::size_t loop_codes = 1;
    for (std::size_t k = 0; k < nl; ++k) loop_codes *= 3;
    for (std::uint32_t nmask = 0; nmask < (1u << nn); ++nmask) {
        for (std::uint32_t imask = 0; imask < (1u << ni); ++imask) {
            for (std::size_t code = 0; code < loop_codes; ++code) {
                for (int w1 = 0; w1 <= weight; ++w1) {
                    UncontractionSpec spec;
                    spec.vertex = vertex;
                    spec.w1 = w1;
                    spec.w2 = weight - w1;
                    for (std::size_t k = 0; k < nn; ++k) (nmask >> k & 1u ? spec.n2 : spec.n1).push_back(split.nonloops[k]);
                    for (std::size_t k = 0; k < ni; ++k) (imask >> k & 1u ? spec.i2 : spec.i1).push_back(split.marks[k]);
                    std::size_t c = code;
                    for (std::size_t k = 0; k < nl; ++k, c /= 3) {
                        (c % 3 == 0 ? spec.l0 : c % 3 == 1 ? spec.l1 : spec.l2).push_back(split.loops[k]);
                    }
                    visit(spec);
                }
            }
        }
    }
}

}  // namespace

Reconstruction reconstruct(const Deck& deck, ReconstructOptions options) {
    if (deck.entries.empty()) throw ReconstructionFailure("deck has no entries");
    for (const auto& entry : deck.entries) {
        if (entry.pair.p() != deck.p - 1 || entry.pair.graph.marking_count() != deck.n)
            throw InvalidArgument("deck entry does not match the header");
        if (genus(entry.pair.graph) != deck.g) throw InvalidArgument("deck entry has the wrong genus");
        if (!options.experimental_generic) {
            for (int w : entry.pair.graph.weights) {
                if (w != 0) throw InvalidArgument("deck has positive vertex weight, so b1 != g");
            }
        }
    }
    if (!options.experimental_generic && deck.p + 1 - deck.g + 1 < 3)
        throw InvalidArgument("reconstruction needs at least three vertices");

    const CycleSet cycles = cycles_from_deck(deck);
    const IntersectionMatrix target = q_from_deck(deck, cycles, QOptions{options.experimental_generic});

    // The contracted vertex has more legs than any vertex of G.
    int best_entry = -1, best_vertex = -1, best_legs = -1;
    for (std::size_t t = 0; t < deck.entries.size(); ++t) {
        const StableGraph& graph = deck.entries[t].pair.graph;
        for (int v = 0; v < graph.vertex_count(); ++v) {
            const int value = legs(graph, v) + 2 * graph.weights[v];
            const bool preferred = value == best_legs && deck.entries[t].index == options.preferred_entry &&
                                   deck.entries[best_entry].index != options.preferred_entry;
            if (value > best_legs || preferred) {
                best_legs = value;
                best_entry = static_cast<int>(t);
                best_vertex = v;
            }
        }
    }
    const DeckEntry& chosen = deck.entries[best_entry];
    const StableGraph& graph = chosen.pair.graph;
    Split split;
    for (int e = 0; e < graph.edge_count(); ++e) {
        const auto ends = graph.ends(e);
        if (ends[0] != best_vertex && ends[1] != best_vertex) continue;
        (ends[0] == ends[1] ? split.loops : split.nonloops).push_back(chosen.pair.labels[e]);
    }
    for (int i = 0; i < graph.marking_count(); ++i) {
        if (graph.markings[i] == best_vertex) split.marks.push_back(i);
    }

    Reconstruction result;
    result.entry_index = chosen.index;
    result.vertex = best_vertex;
    std::set<Certificate> found;
    for_each_spec(split, best_vertex, graph.weights[best_vertex], [&](const UncontractionSpec& spec) {
        LabelledPair candidate;
        try {
            candidate = uncontract(chosen.pair, chosen.index, spec);
        } catch (const UnstableGraph&) {
            return;
        }
        ++result.candidates;
        if (intersection_matrix(candidate) != target) return;
        if (found.insert(pair_certificate(candidate)).second) result.pair = std::move(candidate);
    });
    if (found.empty()) throw ReconstructionFailure("no uncontraction matches the deck");
    if (found.size() > 1)
        throw InternalInconsistency("several non-isomorphic uncontractions match the deck");
    const Deck check = make_deck(result.pair);
    bool same = check.entries.size() == deck.entries.size();
    for (std::size_t t = 0; same && t < deck.entries.size(); ++t) {
        same = check.entries[t].index == deck.entries[t].index &&
               pair_certificate(check.entries[t].pair) == pair_certificate(deck.entries[t].pair);
    }
    if (!same) throw ReconstructionFailure("the matching uncontraction has a different deck");
    return result;
}

}  // namespace tropdelta
