#pragma once

#include <string>
#include <vector>

#include "tropdelta/graph.hpp"

namespace tropdelta {

struct DeckEntry {
    int index = 0;  ///< label of the contracted nonloop edge
    LabelledPair pair;
};

/// Nonloop contraction deck of a p-simplex, entries in ascending label order.
struct Deck {
    int g = 0;
    int n = 0;
    int p = 0;
    std::vector<DeckEntry> entries;
};

Deck make_deck(const LabelledPair& pair);

/// cycles[k] holds the sorted label sets of k-cycles for 1 <= k <= p + 1; cycles[0] is empty.
using CycleSet = std::vector<std::vector<std::vector<int>>>;

CycleSet total_cycles(const LabelledPair& pair);
CycleSet cycles_from_deck(const Deck& deck);

/// Rows and columns are edge labels 0..p followed by markings 1..n.
using IntersectionMatrix = std::vector<std::vector<int>>;

IntersectionMatrix intersection_matrix(const LabelledPair& pair);

enum class FullSubgraph { none, e0, e1, e2, e3, e4, t4, e5, e6 };

std::string to_string(FullSubgraph shape);

/// Shape of the underlying simple graph when |V| is 3 or 4, read from the deck alone.
FullSubgraph classify_full_subgraph(const Deck& deck, const CycleSet& cycles);
bool detect_full_subgraph(const Deck& deck, const CycleSet& cycles, FullSubgraph which);

struct QOptions {
    /// Use the min-over-contractions formula for every entry, whatever |V| is.
    bool generic_only = false;
};

/// Requires b1 = g and |V| >= 3 unless generic_only is set.
IntersectionMatrix q_from_deck(const Deck& deck, const CycleSet& cycles, QOptions options = {});

/// Splits vertex v of a pair with labels [p - 1] into v1 = v and a new vertex v2 joined by an
/// edge labelled j. Lists hold labels of the input pair and 0-based marking indices.
struct UncontractionSpec {
    int vertex = 0;
    std::vector<int> n1, n2;      ///< nonloop edges at v
    std::vector<int> i1, i2;      ///< markings at v
    std::vector<int> l0, l1, l2;  ///< loops at v; l0 becomes parallel to the new edge
    int w1 = 0;
    int w2 = 0;
};

LabelledPair uncontract(const LabelledPair& pair, int j, const UncontractionSpec& spec);

struct ReconstructOptions {
    /// Generic Q formula only; accepts decks with b1 != g and splits vertex weight.
    bool experimental_generic = false;
    /// Deck index to uncontract when it attains the maximal vertex; otherwise the smallest one is used.
    int preferred_entry = -1;
};

struct Reconstruction {
    LabelledPair pair;
    int entry_index = 0;  ///< deck index j that was uncontracted
    int vertex = 0;       ///< vertex of that entry carrying the contracted edge
    int candidates = 0;   ///< uncontractions tested
};

Reconstruction reconstruct(const Deck& deck, ReconstructOptions options = {});

}  // namespace tropdelta
