#include "tropdelta/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tropdelta/errors.hpp"

namespace tropdelta {

Complex::Complex(const Skeleton& skeleton) : g_(skeleton.g()), n_(skeleton.n()) {
    const int top = skeleton.max_edges();
    levels_.resize(top + 1);
    index_.resize(top + 1);
    for (int m = 0; m <= top; ++m) {
        const auto& graphs = skeleton.with_edges(m);
        auto& level = levels_[m];
        level.resize(graphs.size());
        for (std::size_t k = 0; k < graphs.size(); ++k) {
            level[k].graph = graphs[k];
            level[k].certificate = skeleton.certificates(m)[k];
            level[k].aut = edge_automorphisms(graphs[k]);
            index_[m].emplace(level[k].certificate, static_cast<int>(k));
        }
    }
    for (int m = 1; m <= top; ++m) {
        for (auto& cls : levels_[m]) {
            cls.faces.resize(m);
            for (int e = 0; e < m; ++e) {
                const Contraction c = contract(cls.graph, e);
                const CanonicalGraph target = canonical_graph(c.graph);
                FaceLink& link = cls.faces[e];
                link.target = index_[m - 1].at(target.certificate);
                link.edge_map.assign(m, -1);
                for (int f = 0; f < m; ++f) {
                    if (f != e) link.edge_map[f] = target.edge_map[c.edge_map[f]];
                }
            }
        }
    }
}

std::size_t Complex::class_count() const {
    std::size_t total = 0;
    for (const auto& level : levels_) total += level.size();
    return total;
}

int Complex::find_class(const StableGraph& graph) const {
    const int m = graph.edge_count();
    if (m < 0 || m > max_edges()) return -1;
    auto it = index_[m].find(certificate(graph));
    return it == index_[m].end() ? -1 : it->second;
}

SimplexRef Complex::normalize(SimplexRef simplex) const {
    const auto& aut = data(simplex).aut;
    std::vector<int> best = simplex.labelling;
    std::vector<int> candidate(best.size());
    for (const auto& alpha : aut) {
        for (std::size_t e = 0; e < candidate.size(); ++e) candidate[e] = simplex.labelling[alpha[e]];
        if (candidate < best) best = candidate;
    }
    simplex.labelling = std::move(best);
    return simplex;
}

SimplexRef Complex::simplex_of(const LabelledPair& pair) const {
    const CanonicalGraph c = canonical_graph(pair.graph);
    const int m = pair.graph.edge_count();
    if (m > max_edges()) throw NotFound("pair has too many edges for this complex");
    auto it = index_[m].find(c.certificate);
    if (it == index_[m].end()) throw NotFound("graph is not a class of this complex");
    SimplexRef s{m - 1, it->second, std::vector<int>(m)};
    for (int e = 0; e < m; ++e) s.labelling[c.edge_map[e]] = pair.labels[e];
    return normalize(std::move(s));
}

LabelledPair Complex::pair_of(const SimplexRef& simplex) const {
    return make_pair(data(simplex).graph, simplex.labelling);
}

SimplexRef Complex::face(const SimplexRef& simplex, int i) const {
    const int m = simplex.p + 1;
    if (i < 0 || i >= m) throw InvalidArgument("face index out of range");
    const ClassData& cls = data(simplex);
    const int e = static_cast<int>(
        std::find(simplex.labelling.begin(), simplex.labelling.end(), i) - simplex.labelling.begin());
    const FaceLink& link = cls.faces[e];
    SimplexRef out{simplex.p - 1, link.target, std::vector<int>(m - 1)};
    for (int f = 0; f < m; ++f) {
        if (f != e) out.labelling[link.edge_map[f]] = collapse(i, simplex.labelling[f]);
    }
    return normalize(std::move(out));
}

SimplexRef Complex::act(const std::vector<int>& a, const SimplexRef& simplex) const {
    SimplexRef out = simplex;
    for (auto& x : out.labelling) x = a.at(x);
    return normalize(std::move(out));
}

std::vector<std::vector<int>> Complex::stabilizer(const SimplexRef& simplex) const {
    const auto& tau = simplex.labelling;
    std::set<std::vector<int>> out;
    for (const auto& alpha : data(simplex).aut) {
        std::vector<int> a(tau.size());
        for (std::size_t e = 0; e < tau.size(); ++e) a[tau[e]] = tau[alpha[e]];
        out.insert(std::move(a));
    }
    return {out.begin(), out.end()};
}

std::vector<SimplexRef> Complex::simplices(int p) const {
    const int m = p + 1;
    std::vector<SimplexRef> out;
    if (m < 0 || m > max_edges()) return out;
    for (int k = 0; k < static_cast<int>(levels_[m].size()); ++k) {
        std::set<std::vector<int>> seen;
        std::vector<int> labelling(m);
        std::iota(labelling.begin(), labelling.end(), 0);
        do {
            seen.insert(normalize(SimplexRef{p, k, labelling}).labelling);
        } while (std::next_permutation(labelling.begin(), labelling.end()));
        for (const auto& l : seen) out.push_back(SimplexRef{p, k, l});
    }
    return out;
}

std::vector<FVectorEntry> Complex::f_vector() const {
    std::vector<FVectorEntry> out;
    for (int m = 1; m <= max_edges(); ++m) {
        FVectorEntry entry{m - 1, levels_[m].size(), 0};
        std::uint64_t factorial = 1;
        for (int k = 2; k <= m; ++k) factorial *= static_cast<std::uint64_t>(k);
        for (const auto& cls : levels_[m]) entry.simplices += factorial / cls.aut.size();
        out.push_back(entry);
    }
    return out;
}

std::vector<std::pair<int, int>> Complex::v_subcomplex(int i) const {
    std::vector<std::pair<int, int>> out;
    for (int m = 0; m <= max_edges(); ++m) {
        for (int k = 0; k < static_cast<int>(levels_[m].size()); ++k) {
            if (levels_[m][k].graph.vertex_count() <= i) out.emplace_back(m, k);
        }
    }
    return out;
}

StableGraph make_r(int g, int n, int k) {
    if (k < 0 || k > g) throw InvalidArgument("R^k needs 0 <= k <= g");
    std::vector<std::array<int, 2>> edges(k, {0, 0});
    StableGraph graph = make_graph({g - k}, edges, std::vector<int>(n, 0));
    validate(graph, g, n);
    return graph;
}

bool b_admissible(int g, int n, int k, int l, const std::vector<int>& a) {
    const int bridges = g - k - l + 1;
    if (k < 0 || l < 0 || bridges < 1) return false;
    std::set<int> marks(a.begin(), a.end());
    if (marks.size() != a.size()) return false;
    for (int x : marks) {
        if (x < 0 || x >= n) return false;
    }
    const int a_size = static_cast<int>(marks.size());
    return 2 * k + bridges + a_size >= 3 && 2 * l + bridges + (n - a_size) >= 3;
}

StableGraph make_b(int g, int n, int k, int l, const std::vector<int>& a) {
    if (!b_admissible(g, n, k, l, a)) throw InvalidArgument("B^{k,l}_A is not admissible");
    std::vector<std::array<int, 2>> edges;
    for (int i = 0; i < k; ++i) edges.push_back({0, 0});
    for (int i = 0; i < l; ++i) edges.push_back({1, 1});
    for (int i = 0; i < g - k - l + 1; ++i) edges.push_back({0, 1});
    std::vector<int> markings(n, 1);
    for (int x : a) markings[x] = 0;
    return make_graph({0, 0}, edges, std::move(markings));
}

bool related(const Complex& complex, const StableGraph& a, const StableGraph& b) {
    const int ca = complex.find_class(a);
    const int cb = complex.find_class(b);
    if (ca < 0 || cb < 0) throw NotFound("graph is not a class of this complex");
    const int ma = a.edge_count(), mb = b.edge_count();
    const int top = complex.max_edges();
    for (int f = 0; f < static_cast<int>(complex.classes(top).size()); ++f) {
        std::vector<std::set<int>> reach(top + 1);
        reach[top].insert(f);
        for (int m = top; m > 0; --m) {
            for (int k : reach[m]) {
                for (const auto& link : complex.data(m, k).faces) reach[m - 1].insert(link.target);
            }
        }
        if (reach[ma].count(ca) && reach[mb].count(cb)) return true;
    }
    return false;
}

}  // namespace tropdelta
