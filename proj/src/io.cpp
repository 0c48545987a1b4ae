#include "tropdelta/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "tropdelta/errors.hpp"

namespace tropdelta {

const char* const tool_version = "tropdelta 1.0.0";

using nlohmann::json;

json graph_to_json(const StableGraph& graph, const std::vector<int>* labels) {
    json out;
    out["g"] = genus(graph);
    out["n"] = graph.marking_count();
    json vertices = json::array();
    for (int v = 0; v < graph.vertex_count(); ++v) vertices.push_back({{"id", v}, {"weight", graph.weights[v]}});
    out["vertices"] = std::move(vertices);
    json edges = json::array();
    for (int e = 0; e < graph.edge_count(); ++e) {
        const auto ends = graph.ends(e);
        json edge = {{"id", e}, {"ends", {ends[0], ends[1]}}};
        if (labels) edge["label"] = (*labels)[e];
        edges.push_back(std::move(edge));
    }
    out["edges"] = std::move(edges);
    json markings = json::object();
    for (int i = 0; i < graph.marking_count(); ++i) markings[std::to_string(i + 1)] = graph.markings[i];
    out["markings"] = std::move(markings);
    return out;
}

json pair_to_json(const LabelledPair& pair) { return graph_to_json(pair.graph, &pair.labels); }

namespace {

struct Parsed {
    StableGraph graph;
    std::vector<int> labels;
    bool has_labels = false;
};

Parsed parse_record(const json& record) {
    try {
        const int g = record.at("g").get<int>();
        const int n = record.at("n").get<int>();
        std::map<int, int> weight_by_id;
        for (const auto& v : record.at("vertices")) {
            if (!weight_by_id.emplace(v.at("id").get<int>(), v.at("weight").get<int>()).second)
                throw InvalidGraph("duplicate vertex id");
        }
        std::map<int, int> vertex_index;
        std::vector<int> weights;
        for (const auto& [id, w] : weight_by_id) {
            if (w < 0) throw InvalidGraph("negative vertex weight");
            vertex_index[id] = static_cast<int>(weights.size());
            weights.push_back(w);
        }
        auto vertex = [&](int id) {
            auto it = vertex_index.find(id);
            if (it == vertex_index.end()) throw InvalidGraph("unknown vertex id " + std::to_string(id));
            return it->second;
        };
        std::map<int, std::pair<std::array<int, 2>, std::optional<int>>> edge_by_id;
        for (const auto& e : record.at("edges")) {
            const auto& ends = e.at("ends");
            if (!ends.is_array() || ends.size() != 2) throw InvalidGraph("edge ends must be a pair");
            std::optional<int> label;
            if (e.contains("label")) label = e.at("label").get<int>();
            const std::array<int, 2> pair{vertex(ends[0].get<int>()), vertex(ends[1].get<int>())};
            if (!edge_by_id.emplace(e.at("id").get<int>(), std::make_pair(pair, label)).second)
                throw InvalidGraph("duplicate edge id");
        }
        Parsed out;
        std::vector<std::array<int, 2>> edges;
        std::size_t labelled = 0;
        for (const auto& [id, entry] : edge_by_id) {
            edges.push_back(entry.first);
            out.labels.push_back(entry.second.value_or(-1));
            labelled += entry.second ? 1 : 0;
        }
        if (labelled != 0 && labelled != edges.size()) throw InvalidLabelling("labels must be given on all edges or none");
        out.has_labels = labelled != 0 || edges.empty();
        std::vector<int> markings(n, -1);
        for (const auto& [key, v] : record.at("markings").items()) {
            std::size_t used = 0;
            const int i = std::stoi(key, &used);
            if (used != key.size() || i < 1 || i > n) throw InvalidGraph("marking index out of range: " + key);
            markings[i - 1] = vertex(v.get<int>());
        }
        for (int m : markings) {
            if (m < 0) throw InvalidGraph("every marking 1..n needs a vertex");
        }
        out.graph = make_graph(std::move(weights), edges, std::move(markings));
        validate(out.graph, g, n);
        return out;
    } catch (const json::exception& e) {
        throw InvalidGraph(std::string("malformed graph record: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw InvalidGraph("marking keys must be integers");
    }
}

}  // namespace

StableGraph graph_from_json(const json& record) { return parse_record(record).graph; }

LabelledPair pair_from_json(const json& record) {
    Parsed parsed = parse_record(record);
    if (!parsed.has_labels) throw InvalidLabelling("pair record has no edge labels");
    return make_pair(std::move(parsed.graph), std::move(parsed.labels));
}

json deck_to_json(const Deck& deck) {
    json entries = json::array();
    for (const auto& entry : deck.entries) entries.push_back({{"index", entry.index}, {"pair", pair_to_json(entry.pair)}});
    return {{"g", deck.g}, {"n", deck.n}, {"p", deck.p}, {"entries", std::move(entries)}};
}

Deck deck_from_json(const json& record) {
    try {
        Deck deck;
        deck.g = record.at("g").get<int>();
        deck.n = record.at("n").get<int>();
        deck.p = record.at("p").get<int>();
        for (const auto& entry : record.at("entries")) {
            DeckEntry e{entry.at("index").get<int>(), pair_from_json(entry.at("pair"))};
            if (e.index < 0 || e.index > deck.p) throw InvalidArgument("deck index out of range");
            if (e.pair.p() != deck.p - 1) throw InvalidArgument("deck entry has the wrong number of edges");
            deck.entries.push_back(std::move(e));
        }
        std::sort(deck.entries.begin(), deck.entries.end(),
                  [](const DeckEntry& a, const DeckEntry& b) { return a.index < b.index; });
        for (std::size_t i = 1; i < deck.entries.size(); ++i) {
            if (deck.entries[i].index == deck.entries[i - 1].index) throw InvalidArgument("duplicate deck index");
        }
        return deck;
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed deck: ") + e.what());
    }
}

std::string format_matrix(const IntersectionMatrix& q, int p, int n) {
    std::vector<std::string> headers;
    for (int i = 0; i <= p; ++i) headers.push_back("e" + std::to_string(i));
    for (int i = 1; i <= n; ++i) headers.push_back("m" + std::to_string(i));
    std::size_t width = 1;
    for (const auto& h : headers) width = std::max(width, h.size());
    auto pad = [width](const std::string& s) { return std::string(width - s.size(), ' ') + s; };
    std::ostringstream out;
    out << pad("");
    for (const auto& h : headers) out << ' ' << pad(h);
    out << '\n';
    for (std::size_t r = 0; r < q.size(); ++r) {
        out << pad(headers[r]);
        for (int x : q[r]) out << ' ' << pad(std::to_string(x));
        out << '\n';
    }
    return out.str();
}

void save_skeleton(const std::filesystem::path& path, const Skeleton& skeleton) {
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw InvalidArgument("cannot write cache file " + tmp);
        out << json{{"g", skeleton.g()}, {"n", skeleton.n()}, {"tool_version", tool_version},
                    {"max_edges", skeleton.max_edges()}}
                   .dump()
            << '\n';
        for (int m = 0; m <= skeleton.max_edges(); ++m) {
            for (const auto& graph : skeleton.with_edges(m)) out << graph_to_json(graph).dump() << '\n';
        }
        if (!out) throw InvalidArgument("failed writing cache file " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

std::optional<Skeleton> load_skeleton(const std::filesystem::path& path, int g, int n) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line)) return std::nullopt;
    const json header = json::parse(line, nullptr, false);
    if (header.is_discarded() || header.value("g", -1) != g || header.value("n", -1) != n ||
        header.value("tool_version", std::string()) != tool_version)
        return std::nullopt;
    std::vector<std::vector<StableGraph>> by_edges(header.at("max_edges").get<int>() + 1);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json record = json::parse(line, nullptr, false);
        if (record.is_discarded()) return std::nullopt;
        StableGraph graph = graph_from_json(record);
        const int m = graph.edge_count();
        if (m >= static_cast<int>(by_edges.size())) return std::nullopt;
        by_edges[m].push_back(std::move(graph));
    }
    return Skeleton(g, n, std::move(by_edges));
}

Skeleton cached_skeleton(int g, int n, const std::optional<std::filesystem::path>& cache_dir) {
    if (!cache_dir) return enumerate_all(g, n);
    const auto path = *cache_dir / ("skeleton_g" + std::to_string(g) + "_n" + std::to_string(n) + ".jsonl");
    if (auto cached = load_skeleton(path, g, n)) return std::move(*cached);
    Skeleton skeleton = enumerate_all(g, n);
    std::filesystem::create_directories(*cache_dir);
    save_skeleton(path, skeleton);
    return skeleton;
}

}  // namespace tropdelta
