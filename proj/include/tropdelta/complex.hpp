#pragma once

#include <compare>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tropdelta/canonical.hpp"
#include "tropdelta/enumeration.hpp"
#include "tropdelta/graph.hpp"

namespace tropdelta {

/// A p-simplex [G, tau]: class index within edge count p + 1 and a labelling of the
/// representative's edges, normalised to the least labelling in its Aut_E orbit.
struct SimplexRef {
    int p = -1;
    int cls = 0;
    std::vector<int> labelling;

    auto operator<=>(const SimplexRef&) const = default;
};

struct FaceLink {
    int target = 0;             ///< class index with one edge fewer
    std::vector<int> edge_map;  ///< edge -> edge of the target representative, -1 for the contracted edge
};

struct ClassData {
    StableGraph graph;
    Certificate certificate;
    std::vector<std::vector<int>> aut;  ///< Aut_E, identity first
    std::vector<FaceLink> faces;        ///< one per edge
};

struct FVectorEntry {
    int p = 0;
    std::size_t classes = 0;
    std::uint64_t simplices = 0;
};

class Complex {
public:
    explicit Complex(const Skeleton& skeleton);

    int g() const { return g_; }
    int n() const { return n_; }
    int max_edges() const { return static_cast<int>(levels_.size()) - 1; }
    int dimension() const { return max_edges() - 1; }
    const std::vector<ClassData>& classes(int edges) const { return levels_.at(edges); }
    const ClassData& data(int edges, int cls) const { return levels_.at(edges).at(cls); }
    const ClassData& data(const SimplexRef& s) const { return data(s.p + 1, s.cls); }
    std::size_t class_count() const;
    /// Class index of a graph, or -1 when it is not in this complex.
    int find_class(const StableGraph& graph) const;

    SimplexRef normalize(SimplexRef simplex) const;
    SimplexRef simplex_of(const LabelledPair& pair) const;
    LabelledPair pair_of(const SimplexRef& simplex) const;
    /// d_i: contracts the edge labelled i.
    SimplexRef face(const SimplexRef& simplex, int i) const;
    /// a . [G, tau] = [G, a o tau].
    SimplexRef act(const std::vector<int>& a, const SimplexRef& simplex) const;
    /// Stabilizer in S_{p+1}, sorted.
    std::vector<std::vector<int>> stabilizer(const SimplexRef& simplex) const;
    /// Every p-simplex, in class then labelling order.
    std::vector<SimplexRef> simplices(int p) const;
    std::vector<FVectorEntry> f_vector() const;
    /// Classes with at most i vertices, as (edge count, class index).
    std::vector<std::pair<int, int>> v_subcomplex(int i) const;

private:
    int g_ = 0;
    int n_ = 0;
    std::vector<std::vector<ClassData>> levels_;
    std::vector<std::unordered_map<Certificate, int>> index_;
};

/// One vertex of weight g - k carrying k loops and every marking.
StableGraph make_r(int g, int n, int k);
/// Two vertices with k and l loops, g - k - l + 1 connecting edges, markings A (0-based) at
/// the first vertex. Throws InvalidArgument when not admissible.
StableGraph make_b(int g, int n, int k, int l, const std::vector<int>& a);
bool b_admissible(int g, int n, int k, int l, const std::vector<int>& a);

/// Some graph of the skeleton contracts onto both G and H.
bool related(const Complex& complex, const StableGraph& a, const StableGraph& b);

}  // namespace tropdelta
