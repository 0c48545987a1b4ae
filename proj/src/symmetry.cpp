#include "tropdelta/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "tropdelta/canonical.hpp"
#include "tropdelta/errors.hpp"

namespace tropdelta {

namespace {

using Perm = std::vector<int>;

Perm normalize_map(const std::vector<Perm>& target_aut, const Perm& phi) {
    Perm best = phi;
    Perm candidate(phi.size());
    for (const auto& beta : target_aut) {
        for (std::size_t e = 0; e < phi.size(); ++e) candidate[e] = beta[phi[e]];
        if (candidate < best) best = candidate;
    }
    return best;
}

bool conjugates(const std::vector<Perm>& source_aut, const std::vector<Perm>& target_aut, const Perm& phi) {
    if (source_aut.size() != target_aut.size()) return false;
    Perm inverse(phi.size());
    for (std::size_t e = 0; e < phi.size(); ++e) inverse[phi[e]] = static_cast<int>(e);
    Perm image(phi.size());
    for (const auto& alpha : source_aut) {
        for (std::size_t e = 0; e < phi.size(); ++e) image[e] = phi[alpha[inverse[e]]];
        if (!std::binary_search(target_aut.begin(), target_aut.end(), image)) return false;
    }
    return true;
}

std::vector<int> bridges_of(const StableGraph& graph) {
    std::vector<int> out;
    for (int e = 0; e < graph.edge_count(); ++e) {
        if (is_bridge(graph, e)) out.push_back(e);
    }
    return out;
}

std::vector<std::vector<std::vector<int>>> all_cycles(const StableGraph& graph) {
    std::vector<std::vector<std::vector<int>>> out(graph.edge_count() + 1);
    for (int k = 1; k <= graph.edge_count(); ++k) out[k] = k_cycles(graph, k);
    return out;
}

std::vector<std::vector<int>> image_sets(const std::vector<std::vector<int>>& sets, const Perm& phi) {
    std::vector<std::vector<int>> out;
    for (const auto& s : sets) {
        std::vector<int> t;
        for (int e : s) t.push_back(phi[e]);
        std::sort(t.begin(), t.end());
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

StableGraph apply_sigma(const StableGraph& graph, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != graph.marking_count()) throw InvalidArgument("sigma has the wrong size");
    StableGraph out = graph;
    for (int i = 0; i < graph.marking_count(); ++i) out.markings[sigma[i]] = graph.markings[i];
    return out;
}

LabelledPair apply_sigma(const LabelledPair& pair, const std::vector<int>& sigma) {
    return LabelledPair{apply_sigma(pair.graph, sigma), pair.labels};
}

std::vector<MuTriple> admissible_triples(int g, int n) {
    std::vector<MuTriple> out;
    for (int k = 0; k <= g; ++k) {
        for (int l = 0; l <= k; ++l) {
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                std::vector<int> a;
                for (int i = 0; i < n; ++i) {
                    if (mask >> i & 1u) a.push_back(i);
                }
                if (b_admissible(g, n, k, l, a)) out.push_back(MuTriple{k, l, std::move(a)});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

StableGraph mu_target(int g, int n, const MuTriple& triple) {
    StableGraph b = make_b(g, n, triple.k, triple.l, triple.a);
    if (triple.l == 0) return b;
    std::vector<int> loops;
    for (int e = 0; e < b.edge_count(); ++e) {
        if (b.is_loop(e) && b.ends(e)[0] == 1) loops.push_back(e);
    }
    return contract_edges(b, loops).graph;
}

std::int64_t mu_bruteforce(const Skeleton& skeleton, const MuTriple& triple) {
    const StableGraph target = mu_target(skeleton.g(), skeleton.n(), triple);
    const Certificate cert = certificate(target);
    const int m = target.edge_count() + 1;
    if (m > skeleton.max_edges()) return 0;
    std::int64_t count = 0;
    for (const auto& graph : skeleton.with_edges(m)) {
        if (graph.vertex_count() != 3) continue;
        if (!k_cycles(graph, 1).empty() || !k_cycles(graph, 3).empty()) continue;
        for (int e = 0; e < m; ++e) {
            if (certificate(contract(graph, e).graph) == cert) {
                ++count;
                break;
            }
        }
    }
    return count;
}

std::int64_t mu_formula(int g, int n, const MuTriple& triple) {
    const std::int64_t a = static_cast<std::int64_t>(triple.a.size());
    const std::int64_t pa = std::int64_t{1} << a;
    const std::int64_t pc = std::int64_t{1} << (n - a);
    if (triple.k == 0 && triple.l == 0) return g == 0 ? pa + pc - 2 * n - 4 : pa + pc - n - 2;
    if (triple.k == 1) return pa - 1;
    return pa;
}

ComplexAutomorphism identity_automorphism(const Complex& complex) {
    ComplexAutomorphism out;
    out.class_map.resize(complex.max_edges() + 1);
    out.edge_maps.resize(complex.max_edges() + 1);
    for (int m = 0; m <= complex.max_edges(); ++m) {
        const auto& level = complex.classes(m);
        out.class_map[m].resize(level.size());
        std::iota(out.class_map[m].begin(), out.class_map[m].end(), 0);
        for (const auto& cls : level) {
            Perm id(m);
            std::iota(id.begin(), id.end(), 0);
            out.edge_maps[m].push_back(normalize_map(cls.aut, id));
        }
    }
    return out;
}

ComplexAutomorphism compose(const Complex& complex, const ComplexAutomorphism& second,
                            const ComplexAutomorphism& first) {
    ComplexAutomorphism out = first;
    for (int m = 0; m <= complex.max_edges(); ++m) {
        for (std::size_t c = 0; c < first.class_map[m].size(); ++c) {
            const int mid = first.class_map[m][c];
            const int end = second.class_map[m][mid];
            Perm phi(m);
            for (int e = 0; e < m; ++e) phi[e] = second.edge_maps[m][mid][first.edge_maps[m][c][e]];
            out.class_map[m][c] = end;
            out.edge_maps[m][c] = normalize_map(complex.data(m, end).aut, phi);
        }
    }
    return out;
}

SimplexRef apply(const Complex& complex, const ComplexAutomorphism& phi, const SimplexRef& simplex) {
    const int m = simplex.p + 1;
    const auto& map = phi.edge_maps[m][simplex.cls];
    SimplexRef out{simplex.p, phi.class_map[m][simplex.cls], std::vector<int>(m)};
    for (int e = 0; e < m; ++e) out.labelling[map[e]] = simplex.labelling[e];
    return complex.normalize(std::move(out));
}

ComplexAutomorphism sigma_automorphism(const Complex& complex, const std::vector<int>& sigma) {
    ComplexAutomorphism out;
    out.class_map.resize(complex.max_edges() + 1);
    out.edge_maps.resize(complex.max_edges() + 1);
    for (int m = 0; m <= complex.max_edges(); ++m) {
        for (const auto& cls : complex.classes(m)) {
            const CanonicalGraph image = canonical_graph(apply_sigma(cls.graph, sigma));
            const int target = complex.find_class(image.graph);
            if (target < 0) throw InternalInconsistency("relabelled class is missing from the complex");
            out.class_map[m].push_back(target);
            out.edge_maps[m].push_back(normalize_map(complex.data(m, target).aut, image.edge_map));
        }
    }
    return out;
}

namespace {

class AutSearch {
public:
    AutSearch(const Complex& complex, const AutOptions& options)
        : complex_(complex), options_(options), top_(complex.max_edges()) {
        if (options.prune_by_invariants) compute_invariants();
        order_facets();
        const int below = top_ - 1;
        cofaces_.resize(below >= 0 ? complex.classes(below).size() : 0);
        for (int c = 0; c < static_cast<int>(complex.classes(top_).size()); ++c) {
            const auto& faces = complex.data(top_, c).faces;
            for (int e = 0; e < static_cast<int>(faces.size()); ++e) cofaces_[faces[e].target].emplace_back(c, e);
        }
    }

    struct State {
        std::vector<std::vector<int>> image;
        std::vector<std::vector<Perm>> maps;
        std::vector<std::vector<char>> used;
    };

    State empty_state() const {
        State s;
        s.image.resize(top_ + 1);
        s.maps.resize(top_ + 1);
        s.used.resize(top_ + 1);
        for (int m = 0; m <= top_; ++m) {
            const std::size_t count = complex_.classes(m).size();
            s.image[m].assign(count, -1);
            s.maps[m].resize(count);
            s.used[m].assign(count, 0);
        }
        return s;
    }

    /// Top-level choices for the first facet.
    std::vector<std::pair<int, Perm>> first_choices() const {
        State s = empty_state();
        return choices(s, facet_order_.empty() ? -1 : facet_order_[0]);
    }

    void run_from(const std::pair<int, Perm>& choice, std::vector<ComplexAutomorphism>& out) {
        State s = empty_state();
        if (!assign(s, top_, facet_order_[0], choice.first, choice.second)) return;
        dfs(s, 1, out);
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void compute_invariants() {
        class_sig_.resize(top_ + 1);
        edge_sig_.resize(top_ + 1);
        for (int m = 0; m <= top_; ++m) {
            for (const auto& cls : complex_.classes(m)) {
                const auto cycles = all_cycles(cls.graph);
                std::vector<std::vector<int>> edges(m);
                for (int e = 0; e < m; ++e) {
                    edges[e] = {cls.graph.is_loop(e) ? 1 : 0, is_bridge(cls.graph, e) ? 1 : 0};
                    for (int k = 2; k <= m; ++k) {
                        int count = 0;
                        for (const auto& c : cycles[k]) count += std::binary_search(c.begin(), c.end(), e) ? 1 : 0;
                        edges[e].push_back(count);
                    }
                }
                std::vector<int> sig = {cls.graph.vertex_count(), static_cast<int>(cls.aut.size())};
                auto sorted = edges;
                std::sort(sorted.begin(), sorted.end());
                for (const auto& s : sorted) sig.insert(sig.end(), s.begin(), s.end());
                class_sig_[m].push_back(std::move(sig));
                edge_sig_[m].push_back(std::move(edges));
            }
        }
    }

    bool compatible(int m, int c, int c2, const Perm& phi) const {
        if (!options_.prune_by_invariants) return true;
        if (class_sig_[m][c] != class_sig_[m][c2]) return false;
        for (int e = 0; e < m; ++e) {
            if (edge_sig_[m][c][e] != edge_sig_[m][c2][phi[e]]) return false;
        }
        return true;
    }

    void order_facets() {
        const int count = static_cast<int>(complex_.classes(top_).size());
        std::vector<std::vector<int>> by_face;
        if (top_ > 0) {
            by_face.resize(complex_.classes(top_ - 1).size());
            for (int c = 0; c < count; ++c) {
                for (const auto& link : complex_.data(top_, c).faces) by_face[link.target].push_back(c);
            }
        }
        std::vector<char> seen(count, 0);
        for (int start = 0; start < count; ++start) {
            if (seen[start]) continue;
            std::deque<int> queue{start};
            seen[start] = 1;
            while (!queue.empty()) {
                const int c = queue.front();
                queue.pop_front();
                facet_order_.push_back(c);
                std::set<int> next;
                if (top_ > 0) {
                    for (const auto& link : complex_.data(top_, c).faces) {
                        for (int d : by_face[link.target]) {
                            if (!seen[d]) next.insert(d);
                        }
                    }
                }
                for (int d : next) {
                    seen[d] = 1;
                    queue.push_back(d);
                }
            }
        }
    }

    bool assign(State& s, int m, int c, int c2, Perm phi) {
        std::deque<std::pair<int, int>> queue;
        if (!place(s, m, c, c2, std::move(phi), queue)) return false;
        while (!queue.empty()) {
            const auto [level, cls] = queue.front();
            queue.pop_front();
            const int image = s.image[level][cls];
            const Perm& map = s.maps[level][cls];
            const auto& faces = complex_.data(level, cls).faces;
            const auto& image_faces = complex_.data(level, image).faces;
            for (int e = 0; e < level; ++e) {
                const FaceLink& link = faces[e];
                const FaceLink& image_link = image_faces[map[e]];
                Perm induced(level - 1);
                for (int f = 0; f < level; ++f) {
                    if (f != e) induced[link.edge_map[f]] = image_link.edge_map[map[f]];
                }
                if (!place(s, level - 1, link.target, image_link.target, std::move(induced), queue)) return false;
            }
        }
        return true;
    }

    bool place(State& s, int m, int c, int c2, Perm phi, std::deque<std::pair<int, int>>& queue) {
        const auto& target_aut = complex_.data(m, c2).aut;
        Perm normal = normalize_map(target_aut, phi);
        if (s.image[m][c] >= 0) return s.image[m][c] == c2 && s.maps[m][c] == normal;
        if (s.used[m][c2]) return false;
        if (!conjugates(complex_.data(m, c).aut, target_aut, normal)) return false;
        if (!compatible(m, c, c2, normal)) return false;
        s.image[m][c] = c2;
        s.maps[m][c] = std::move(normal);
        s.used[m][c2] = 1;
        if (m > 0) queue.emplace_back(m, c);
        return true;
    }

    std::vector<std::pair<int, Perm>> choices(const State& s, int c) const {
        std::vector<std::pair<int, Perm>> out;
        if (c < 0) return out;
        const auto& faces = complex_.data(top_, c).faces;
        int anchor = -1;
        for (int e = 0; e < top_; ++e) {
            if (s.image[top_ - 1][faces[e].target] >= 0) {
                anchor = e;
                break;
            }
        }
        auto emit = [&](int c2, Perm phi) {
            const auto& aut = complex_.data(top_, c2).aut;
            if (normalize_map(aut, phi) != phi) return;
            if (!compatible(top_, c, c2, phi)) return;
            out.emplace_back(c2, std::move(phi));
        };
        const int count = static_cast<int>(complex_.classes(top_).size());
        if (anchor < 0) {
            for (int c2 = 0; c2 < count; ++c2) {
                if (s.used[top_][c2]) continue;
                Perm phi(top_);
                std::iota(phi.begin(), phi.end(), 0);
                do {
                    emit(c2, phi);
                } while (std::next_permutation(phi.begin(), phi.end()));
            }
            return out;
        }
        const int image = s.image[top_ - 1][faces[anchor].target];
        for (const auto& [c2, e2] : cofaces_[image]) {
            if (s.used[top_][c2]) continue;
            Perm rest;
            for (int f = 0; f < top_; ++f) {
                if (f != e2) rest.push_back(f);
            }
            do {
                Perm phi(top_);
                phi[anchor] = e2;
                for (int e = 0, r = 0; e < top_; ++e) {
                    if (e != anchor) phi[e] = rest[r++];
                }
                emit(c2, std::move(phi));
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
        return out;
    }

    void dfs(State& s, std::size_t pos, std::vector<ComplexAutomorphism>& out) {
        if (options_.node_budget && nodes_ > options_.node_budget)
            throw BudgetExceeded("automorphism search exceeded its node budget");
        if (pos == facet_order_.size()) {
            ComplexAutomorphism phi;
            phi.class_map = s.image;
            phi.edge_maps = s.maps;
            for (const auto& level : phi.class_map) {
                for (int x : level) {
                    if (x < 0) throw InternalInconsistency("a class is not a face of any facet");
                }
            }
            out.push_back(std::move(phi));
            return;
        }
        const int c = facet_order_[pos];
        for (auto& [c2, phi] : choices(s, c)) {
            ++nodes_;
            State next = s;
            if (assign(next, top_, c, c2, phi)) dfs(next, pos + 1, out);
        }
    }

    const Complex& complex_;
    AutOptions options_;
    int top_;
    std::vector<int> facet_order_;
    std::vector<std::vector<std::pair<int, int>>> cofaces_;
    std::vector<std::vector<std::vector<int>>> class_sig_;
    std::vector<std::vector<std::vector<std::vector<int>>>> edge_sig_;
    std::uint64_t nodes_ = 0;
};

std::vector<int> pick_generators(const Complex& complex, const std::vector<ComplexAutomorphism>& elements) {
    std::vector<int> generators;
    std::set<ComplexAutomorphism> span{identity_automorphism(complex)};
    for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
        if (span.count(elements[i])) continue;
        generators.push_back(i);
        std::deque<ComplexAutomorphism> queue(span.begin(), span.end());
        while (!queue.empty()) {
            const ComplexAutomorphism x = queue.front();
            queue.pop_front();
            for (int gi : generators) {
                ComplexAutomorphism y = compose(complex, elements[gi], x);
                if (span.insert(y).second) queue.push_back(std::move(y));
            }
        }
    }
    return generators;
}

}  // namespace

AutGroup compute_aut(const Complex& complex, const AutOptions& options) {
    if (options.max_cells && complex.class_count() > options.max_cells)
        throw BudgetExceeded("complex has more classes than the configured limit");
    AutSearch search(complex, options);
    const auto first = search.first_choices();
    const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(first.size())));
    std::vector<std::vector<ComplexAutomorphism>> found(first.size());
    std::uint64_t nodes = 0;
    if (threads <= 1) {
        for (std::size_t i = 0; i < first.size(); ++i) search.run_from(first[i], found[i]);
        nodes = search.nodes();
    } else {
        std::mutex lock;
        std::size_t next = 0;
        std::exception_ptr failure;
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                AutSearch local(complex, options);
                for (;;) {
                    std::size_t i;
                    {
                        std::lock_guard<std::mutex> guard(lock);
                        if (next >= first.size() || failure) break;
                        i = next++;
                    }
                    try {
                        local.run_from(first[i], found[i]);
                    } catch (...) {
                        std::lock_guard<std::mutex> guard(lock);
                        failure = std::current_exception();
                    }
                }
                std::lock_guard<std::mutex> guard(lock);
                nodes += local.nodes();
            });
        }
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }
    AutGroup group;
    for (auto& part : found) {
        for (auto& phi : part) group.elements.push_back(std::move(phi));
    }
    std::sort(group.elements.begin(), group.elements.end());
    group.elements.erase(std::unique(group.elements.begin(), group.elements.end()), group.elements.end());
    group.generators = pick_generators(complex, group.elements);
    group.nodes = nodes;
    return group;
}

SnIdentification identify_sn(const Complex& complex, const AutGroup& group) {
    SnIdentification out;
    std::vector<int> sigma(complex.n());
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<int> hits(group.order(), 0);
    do {
        const ComplexAutomorphism f = sigma_automorphism(complex, sigma);
        auto it = std::lower_bound(group.elements.begin(), group.elements.end(), f);
        int index = -1;
        if (it != group.elements.end() && *it == f) {
            index = static_cast<int>(it - group.elements.begin());
            ++hits[index];
        }
        out.image.push_back(index);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    out.surjective = std::all_of(hits.begin(), hits.end(), [](int h) { return h > 0; });
    out.injective = std::all_of(hits.begin(), hits.end(), [](int h) { return h <= 1; }) &&
                    std::find(out.image.begin(), out.image.end(), -1) == out.image.end();
    return out;
}

std::vector<TheoremCheck> verify_structure_theorems(const Skeleton& skeleton, const Complex& complex,
                                                    const AutGroup& group) {
    const int g = complex.g(), n = complex.n();
    const int top = complex.max_edges();
    TheoremCheck vertices{"vertex count preserved", 0, 0, ""};
    TheoremCheck r1{"R^1 fixed", 0, 0, ""};
    TheoremCheck bridges{"bridge labels preserved", 0, 0, ""};
    TheoremCheck cycles{"k-cycle labels preserved", 0, 0, ""};
    TheoremCheck weak{"weak class preserved on V^2[g]", 0, 0, ""};
    TheoremCheck mu{"mu invariant", 0, 0, ""};
    TheoremCheck injective{"V^2 restriction injective", 0, 0, ""};

    std::vector<std::vector<std::vector<int>>> bridge_sets(top + 1);
    std::vector<std::vector<std::vector<std::vector<std::vector<int>>>>> cycle_sets(top + 1);
    for (int m = 0; m <= top; ++m) {
        for (const auto& cls : complex.classes(m)) {
            bridge_sets[m].push_back(bridges_of(cls.graph));
            cycle_sets[m].push_back(all_cycles(cls.graph));
        }
    }
    const int r1_class = g >= 1 ? complex.find_class(make_r(g, n, 1)) : -1;

    const bool mu_defined = n >= 1 && 2 * g - 2 + n >= 3;
    std::vector<MuTriple> triples;
    std::map<MuTriple, std::int64_t> mu_values;
    if (mu_defined) {
        triples = admissible_triples(g, n);
        for (const auto& t : triples) mu_values[t] = mu_bruteforce(skeleton, t);
    }

    for (const auto& phi : group.elements) {
        for (int m = 0; m <= top; ++m) {
            for (int c = 0; c < static_cast<int>(complex.classes(m).size()); ++c) {
                const int c2 = phi.class_map[m][c];
                const Perm& map = phi.edge_maps[m][c];
                const StableGraph& source = complex.data(m, c).graph;
                const StableGraph& target = complex.data(m, c2).graph;
                ++vertices.checked;
                if (source.vertex_count() != target.vertex_count()) {
                    ++vertices.violations;
                    vertices.witness = to_hex(complex.data(m, c).certificate);
                }
                ++bridges.checked;
                std::vector<int> mapped;
                for (int e : bridge_sets[m][c]) mapped.push_back(map[e]);
                std::sort(mapped.begin(), mapped.end());
                if (mapped != bridge_sets[m][c2]) {
                    ++bridges.violations;
                    bridges.witness = to_hex(complex.data(m, c).certificate);
                }
                for (int k = 1; k <= m; ++k) {
                    ++cycles.checked;
                    if (image_sets(cycle_sets[m][c][k], map) != cycle_sets[m][c2][k]) {
                        ++cycles.violations;
                        cycles.witness = to_hex(complex.data(m, c).certificate);
                    }
                }
                if (m == g + 1 && source.vertex_count() <= 2) {
                    ++weak.checked;
                    std::vector<int> labels(m);
                    for (int e = 0; e < m; ++e) labels[map[e]] = e;
                    const LabelledPair image{target, labels};
                    if (pair_certificate(identity_labelled(source), IsoMode::weak) !=
                        pair_certificate(image, IsoMode::weak)) {
                        ++weak.violations;
                        weak.witness = to_hex(complex.data(m, c).certificate);
                    }
                }
            }
        }
        if (r1_class >= 0) {
            ++r1.checked;
            if (phi.class_map[1][r1_class] != r1_class) ++r1.violations;
        }
        for (const auto& t : triples) {
            ++mu.checked;
            const SimplexRef s = complex.simplex_of(identity_labelled(make_b(g, n, t.k, t.l, t.a)));
            const SimplexRef image = apply(complex, phi, s);
            const StableGraph& graph = complex.data(image).graph;
            bool matched = false;
            for (int v = 0; v < graph.vertex_count() && !matched && graph.vertex_count() == 2; ++v) {
                if (loop_count(graph, v) != t.k || loop_count(graph, 1 - v) != t.l) continue;
                std::vector<int> a;
                for (int i = 0; i < n; ++i) {
                    if (graph.markings[i] == v) a.push_back(i);
                }
                if (!b_admissible(g, n, t.k, t.l, a)) continue;
                if (complex.simplex_of(identity_labelled(make_b(g, n, t.k, t.l, a))) != image) continue;
                matched = true;
                if (mu_values.at(t) != mu_values.at(MuTriple{t.k, t.l, a})) {
                    ++mu.violations;
                    mu.witness = "k=" + std::to_string(t.k) + " l=" + std::to_string(t.l);
                }
            }
            if (!matched) {
                ++mu.violations;
                mu.witness = "image of B is not a B graph";
            }
        }
    }

    for (std::size_t i = 0; i < group.elements.size(); ++i) {
        for (std::size_t j = i + 1; j < group.elements.size(); ++j) {
            ++injective.checked;
            bool agree = true;
            for (int m = 0; m <= top && agree; ++m) {
                for (int c = 0; c < static_cast<int>(complex.classes(m).size()) && agree; ++c) {
                    if (complex.data(m, c).graph.vertex_count() > 2) continue;
                    agree = group.elements[i].class_map[m][c] == group.elements[j].class_map[m][c] &&
                            group.elements[i].edge_maps[m][c] == group.elements[j].edge_maps[m][c];
                }
            }
            if (agree) {
                ++injective.violations;
                injective.witness = "elements " + std::to_string(i) + " and " + std::to_string(j);
            }
        }
    }
    return {vertices, r1, bridges, cycles, weak, mu, injective};
}

}  // namespace tropdelta
