#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>

#include "tropdelta/canonical.hpp"
#include "tropdelta/complex.hpp"
#include "tropdelta/enumeration.hpp"
#include "tropdelta/errors.hpp"
#include "tropdelta/io.hpp"
#include "tropdelta/reconstruction.hpp"
#include "tropdelta/symmetry.hpp"
#include "tropdelta/verify.hpp"

using nlohmann::json;
using namespace tropdelta;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Common {
    int g = 0;
    int n = 0;
    bool json = false;
};

void add_gn(CLI::App* cmd, Common& c) {
    cmd->add_option("--g", c.g, "genus")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--n", c.n, "number of markings")->required()->check(CLI::NonNegativeNumber);
}

void check_gn(const Common& c) {
    if (3 * c.g - 3 + c.n <= 0) throw UsageError("need 3g - 3 + n > 0");
    if (c.n > 12) throw UsageError("n is far beyond desk scale");
}

std::optional<std::filesystem::path> cache_dir() {
    const char* dir = std::getenv("TROPDELTA_CACHE");
    if (!dir || !*dir) return std::nullopt;
    return std::filesystem::path(dir);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    json out = json::parse(in, nullptr, false);
    if (out.is_discarded()) throw InvalidArgument(path + " is not valid JSON");
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int run_enumerate(const Common& c, bool by_edges, bool facets_only, const std::string& out_path) {
    check_gn(c);
    std::vector<std::vector<StableGraph>> levels;
    if (facets_only) {
        levels.resize(3 * c.g - 3 + c.n + 1);
        levels.back() = enumerate_facets(c.g, c.n);
    } else {
        const Skeleton skeleton = cached_skeleton(c.g, c.n, cache_dir());
        for (int m = 0; m <= skeleton.max_edges(); ++m) levels.push_back(skeleton.with_edges(m));
    }
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw UsageError("cannot write " + out_path);
    }
    std::ostream& out = out_path.empty() ? std::cout : file;
    if (by_edges) {
        json summary = json::array();
        for (std::size_t m = 0; m < levels.size(); ++m) {
            if (!levels[m].empty()) summary.push_back({{"edges", m}, {"classes", levels[m].size()}});
        }
        std::cerr << summary.dump() << '\n';
    }
    for (const auto& level : levels) {
        for (const auto& graph : level) {
            json record = graph_to_json(graph);
            record["certificate"] = to_hex(certificate(graph));
            out << record.dump() << '\n';
        }
    }
    return 0;
}

int run_complex(const Common& c, bool fvector, bool stabilizers) {
    check_gn(c);
    const Skeleton skeleton = cached_skeleton(c.g, c.n, cache_dir());
    const Complex complex(skeleton);
    if (!fvector && !stabilizers) fvector = true;
    json out{{"g", c.g}, {"n", c.n}, {"dimension", complex.dimension()}};
    if (fvector) {
        json rows = json::array();
        for (const auto& e : complex.f_vector()) rows.push_back({{"p", e.p}, {"classes", e.classes}, {"simplices", e.simplices}});
        out["f_vector"] = std::move(rows);
    }
    if (stabilizers) {
        json rows = json::array();
        for (int m = 1; m <= complex.max_edges(); ++m) {
            for (const auto& cls : complex.classes(m)) {
                rows.push_back({{"p", m - 1},
                                {"certificate", to_hex(cls.certificate)},
                                {"vertices", cls.graph.vertex_count()},
                                {"stabilizer_order", cls.aut.size()}});
            }
        }
        out["stabilizers"] = std::move(rows);
    }
    if (c.json) {
        emit(out);
        return 0;
    }
    std::cout << "Delta_{" << c.g << "," << c.n << "}  dimension " << complex.dimension() << '\n';
    if (fvector) {
        std::cout << std::setw(4) << "p" << std::setw(10) << "classes" << std::setw(14) << "simplices" << '\n';
        for (const auto& row : out["f_vector"])
            std::cout << std::setw(4) << row["p"].get<int>() << std::setw(10) << row["classes"].get<std::size_t>()
                      << std::setw(14) << row["simplices"].get<std::uint64_t>() << '\n';
    }
    if (stabilizers) {
        std::cout << std::setw(4) << "p" << std::setw(6) << "|V|" << std::setw(8) << "|Stab|" << "  certificate\n";
        for (const auto& row : out["stabilizers"])
            std::cout << std::setw(4) << row["p"].get<int>() << std::setw(6) << row["vertices"].get<int>()
                      << std::setw(8) << row["stabilizer_order"].get<std::size_t>() << "  "
                      << row["certificate"].get<std::string>() << '\n';
    }
    return 0;
}

int run_deck(const std::string& in_path, const std::string& out_path) {
    const LabelledPair pair = pair_from_json(read_json_file(in_path));
    const Deck d = make_deck(pair);
    json deck = deck_to_json(d);
    for (std::size_t i = 0; i < d.entries.size(); ++i) {
        deck["entries"][i]["certificate"] = to_hex(pair_certificate(d.entries[i].pair));
    }
    if (out_path.empty()) {
        emit(deck);
    } else {
        std::ofstream out(out_path);
        if (!out) throw UsageError("cannot write " + out_path);
        out << deck.dump(2) << '\n';
    }
    return 0;
}

int run_reconstruct(const Common& c, const std::string& deck_path, bool experimental) {
    check_gn(c);
    const Deck deck = deck_from_json(read_json_file(deck_path));
    if (deck.g != c.g || deck.n != c.n) throw UsageError("deck header does not match --g and --n");
    ReconstructOptions options;
    options.experimental_generic = experimental;
    const Reconstruction r = reconstruct(deck, options);
    const IntersectionMatrix q = intersection_matrix(r.pair);
    if (c.json) {
        emit({{"pair", pair_to_json(r.pair)},
              {"entry_index", r.entry_index},
              {"vertex", r.vertex},
              {"candidates", r.candidates},
              {"certificate", to_hex(pair_certificate(r.pair))},
              {"matrix", q}});
        return 0;
    }
    std::cout << "uncontracted entry " << r.entry_index << " at vertex " << r.vertex << " (" << r.candidates
              << " candidates)\n";
    std::cout << format_matrix(q, deck.p, deck.n);
    std::cout << pair_to_json(r.pair).dump() << '\n';
    return 0;
}

json automorphism_json(const ComplexAutomorphism& phi) {
    return {{"class_perm", phi.class_map}, {"edge_maps", phi.edge_maps}};
}

int run_aut(const Common& c, bool verify, std::size_t max_cells, std::uint64_t node_budget, int threads) {
    check_gn(c);
    const Skeleton skeleton = cached_skeleton(c.g, c.n, cache_dir());
    const Complex complex(skeleton);
    AutOptions options;
    options.max_cells = max_cells;
    options.node_budget = node_budget;
    options.threads = threads;
    const AutGroup group = compute_aut(complex, options);
    const SnIdentification sn = identify_sn(complex, group);
    json out{{"g", c.g}, {"n", c.n}, {"order", group.order()}, {"nodes", group.nodes},
             {"sn_surjective", sn.surjective}, {"sn_injective", sn.injective}};
    json generators = json::array();
    for (int i : group.generators) generators.push_back(automorphism_json(group.elements[i]));
    out["generators"] = std::move(generators);
    bool ok = true;
    if (verify) {
        json checks = json::array();
        for (const auto& t : verify_structure_theorems(skeleton, complex, group)) {
            checks.push_back({{"name", t.name}, {"checked", t.checked}, {"violations", t.violations}, {"witness", t.witness}});
            ok = ok && t.violations == 0;
        }
        out["theorems"] = std::move(checks);
    }
    if (c.json) {
        emit(out);
    } else {
        std::cout << "|Aut(Delta_{" << c.g << "," << c.n << "})| = " << group.order() << '\n';
        std::cout << "generators: " << group.generators.size() << '\n';
        std::cout << "S_n -> Aut: " << (sn.surjective ? "surjective" : "not surjective") << ", "
                  << (sn.injective ? "injective" : "not injective") << '\n';
        if (verify) {
            for (const auto& t : out["theorems"])
                std::cout << (t["violations"].get<std::size_t>() == 0 ? "PASS " : "FAIL ") << t["name"].get<std::string>()
                          << " (" << t["checked"].get<std::size_t>() << " checks)\n";
        }
    }
    return ok ? 0 : 1;
}

std::vector<int> parse_marking_list(const std::string& text, int n) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw UsageError("bad marking in --A: " + item);
        }
        if (used != item.size() || x < 1 || x > n) throw UsageError("bad marking in --A: " + item);
        out.push_back(x - 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int run_mu(const Common& c, bool all, int k, int l, const std::string& a_text, bool compare) {
    check_gn(c);
    if (c.n < 1 || 2 * c.g - 2 + c.n < 3) throw UsageError("mu needs n >= 1 and 2g - 2 + n >= 3");
    std::vector<MuTriple> triples;
    if (all) {
        triples = admissible_triples(c.g, c.n);
    } else {
        if (k < 0) throw UsageError("give --all or --k, --l and --A");
        MuTriple t{k, l, parse_marking_list(a_text, c.n)};
        if (t.k < t.l || !b_admissible(c.g, c.n, t.k, t.l, t.a)) throw InvalidArgument("(k, l, A) is not admissible");
        triples.push_back(std::move(t));
    }
    const Skeleton skeleton = cached_skeleton(c.g, c.n, cache_dir());
    json rows = json::array();
    for (const auto& t : triples) {
        json a = json::array();
        for (int x : t.a) a.push_back(x + 1);
        json row{{"k", t.k}, {"l", t.l}, {"A", a}, {"mu", mu_bruteforce(skeleton, t)}};
        if (compare) {
            const std::int64_t formula = mu_formula(c.g, c.n, t);
            row["formula"] = formula;
            row["agrees"] = formula == row["mu"].get<std::int64_t>();
        }
        rows.push_back(std::move(row));
    }
    if (c.json) {
        emit({{"g", c.g}, {"n", c.n}, {"triples", rows}});
        return 0;
    }
    for (const auto& row : rows) {
        std::string a;
        for (const auto& x : row["A"]) a += (a.empty() ? "" : ",") + std::to_string(x.get<int>());
        std::cout << "k=" << row["k"].get<int>() << " l=" << row["l"].get<int>() << " A={" << a
                  << "} mu=" << row["mu"].get<std::int64_t>();
        if (compare) {
            std::cout << " formula=" << row["formula"].get<std::int64_t>()
                      << (row["agrees"].get<bool>() ? "" : "  DIFFERS");
        }
        std::cout << '\n';
    }
    return 0;
}

int run_verify_all(const Common& c, int threads) {
    check_gn(c);
    VerifyOptions options;
    options.threads = threads;
    options.cache_dir = cache_dir();
    const VerifyReport report = verify_all(c.g, c.n, options);
    if (c.json) {
        json rows = json::array();
        for (const auto& r : report.rows) rows.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        emit({{"g", c.g}, {"n", c.n}, {"ok", report.ok()}, {"checks", rows}});
    } else {
        std::size_t width = 0;
        for (const auto& r : report.rows) width = std::max(width, r.name.size());
        for (const auto& r : report.rows)
            std::cout << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.name
                      << std::right << "  " << r.detail << '\n';
    }
    return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorics of the tropical moduli spaces Delta_{g,n}"};
    app.set_version_flag("--version", std::string(tool_version));
    int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    app.require_subcommand(1);

    Common common;

    auto* enumerate = app.add_subcommand("enumerate", "list stable graph classes");
    add_gn(enumerate, common);
    bool by_edges = false, facets_only = false;
    std::string out_path;
    enumerate->add_flag("--by-edges", by_edges, "print class counts per edge count on stderr");
    enumerate->add_flag("--facets-only", facets_only, "only trivalent weight-zero graphs");
    enumerate->add_option("--out", out_path, "write records to a file");

    auto* complex = app.add_subcommand("complex", "f-vector and stabilizers");
    add_gn(complex, common);
    bool fvector = false, stabilizers = false;
    complex->add_flag("--fvector", fvector, "simplex counts per dimension");
    complex->add_flag("--stabilizers", stabilizers, "one row per simplex with its stabilizer order");
    complex->add_flag("--json", common.json, "machine-readable output");

    auto* deck = app.add_subcommand("deck", "contraction deck of an edge-labelled pair");
    std::string in_path, deck_out;
    deck->add_option("--in", in_path, "pair record")->required();
    deck->add_option("--out", deck_out, "write the deck to a file");

    auto* reconstruct_cmd = app.add_subcommand("reconstruct", "rebuild a pair from its deck");
    std::string deck_path;
    bool experimental = false;
    reconstruct_cmd->add_option("--deck", deck_path, "deck file")->required();
    add_gn(reconstruct_cmd, common);
    reconstruct_cmd->add_flag("--experimental-generic", experimental,
                              "generic intersection formula only; allows b1 != g");
    reconstruct_cmd->add_flag("--json", common.json, "machine-readable output");

    auto* aut = app.add_subcommand("aut", "automorphism group of the complex");
    add_gn(aut, common);
    bool verify = false;
    std::size_t max_cells = 0;
    std::uint64_t node_budget = 0;
    aut->add_flag("--verify", verify, "check the structure theorems on every automorphism");
    aut->add_option("--max-cells", max_cells, "refuse complexes with more classes");
    aut->add_option("--node-budget", node_budget, "give up after this many search nodes");
    aut->add_flag("--json", common.json, "machine-readable output");

    auto* mu = app.add_subcommand("mu", "mu invariants");
    add_gn(mu, common);
    bool all = false, compare = false;
    int k = -1, l = 0;
    std::string a_text;
    mu->add_flag("--all", all, "every admissible (k, l, A)");
    mu->add_option("--k", k, "loops at the first vertex");
    mu->add_option("--l", l, "loops at the second vertex");
    mu->add_option("--A", a_text, "markings at the first vertex, 1-based, comma separated");
    mu->add_flag("--compare-formula", compare, "report the closed form next to the count");
    mu->add_flag("--json", common.json, "machine-readable output");

    auto* verify_all_cmd = app.add_subcommand("verify-all", "run every consistency check");
    add_gn(verify_all_cmd, common);
    verify_all_cmd->add_flag("--json", common.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*enumerate) return run_enumerate(common, by_edges, facets_only, out_path);
        if (*complex) return run_complex(common, fvector, stabilizers);
        if (*deck) return run_deck(in_path, deck_out);
        if (*reconstruct_cmd) return run_reconstruct(common, deck_path, experimental);
        if (*aut) return run_aut(common, verify, max_cells, node_budget, threads);
        if (*mu) return run_mu(common, all, k, l, a_text, compare);
        if (*verify_all_cmd) return run_verify_all(common, threads);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
