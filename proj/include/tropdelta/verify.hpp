#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tropdelta/complex.hpp"
#include "tropdelta/enumeration.hpp"

namespace tropdelta {

/// Deck pipeline over every simplex with b1 = g and at least three vertices.
struct DeckSweep {
    std::size_t pairs = 0;
    std::size_t cycle_mismatches = 0;
    std::size_t matrix_mismatches = 0;
    std::size_t reconstruction_failures = 0;
    std::string witness;

    bool ok() const { return cycle_mismatches == 0 && matrix_mismatches == 0 && reconstruction_failures == 0; }
};

DeckSweep sweep_decks(const Complex& complex);

struct MuComparison {
    std::size_t triples = 0;
    std::size_t mismatches = 0;          ///< counted where the formula is asserted
    std::size_t reported_mismatches = 0; ///< g = 0 with k = l = 0, not asserted
    std::string witness;
};

/// Empty comparison when n = 0 or 2g - 2 + n < 3.
MuComparison compare_mu(const Skeleton& skeleton);

struct CheckRow {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    int threads = 1;
    std::optional<std::filesystem::path> cache_dir;
    std::uint64_t node_budget = 0;
};

struct VerifyReport {
    int g = 0;
    int n = 0;
    std::vector<CheckRow> rows;

    bool ok() const;
};

VerifyReport verify_all(int g, int n, const VerifyOptions& options = {});

}  // namespace tropdelta
