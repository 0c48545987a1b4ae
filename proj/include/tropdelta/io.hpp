#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "tropdelta/enumeration.hpp"
#include "tropdelta/graph.hpp"
#include "tropdelta/reconstruction.hpp"

namespace tropdelta {

/// Build identifier written into cache headers and printed by --version.
extern const char* const tool_version;

/// Interchange record. Markings are keyed "1".."n"; labels are written when given.
nlohmann::json graph_to_json(const StableGraph& graph, const std::vector<int>* labels = nullptr);
nlohmann::json pair_to_json(const LabelledPair& pair);

/// Throws InvalidGraph on malformed records and UnstableGraph or GenusMismatch from validation.
StableGraph graph_from_json(const nlohmann::json& record);
/// Requires a label on every edge.
LabelledPair pair_from_json(const nlohmann::json& record);

nlohmann::json deck_to_json(const Deck& deck);
Deck deck_from_json(const nlohmann::json& record);

/// Integer grid with row and column headers e0..ep, m1..mn.
std::string format_matrix(const IntersectionMatrix& q, int p, int n);

/// JSON lines: a header object {g, n, tool_version}, then one record per class by edge count.
void save_skeleton(const std::filesystem::path& path, const Skeleton& skeleton);
/// Empty when the file is missing or was written by another version.
std::optional<Skeleton> load_skeleton(const std::filesystem::path& path, int g, int n);
/// Reads the cache in the given directory, enumerating and writing it on a miss.
Skeleton cached_skeleton(int g, int n, const std::optional<std::filesystem::path>& cache_dir);

}  // namespace tropdelta
