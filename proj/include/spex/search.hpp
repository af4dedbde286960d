#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spex/graph.hpp"
#include "spex/spectral.hpp"

namespace spex {

struct EnumerationOptions {
    int budget = 10;  // largest m accepted without an explicit raise
    std::optional<std::pair<int, int>> n_range;
    int workers = 1;
};

class BudgetError : public std::runtime_error {
public:
    BudgetError(int requested_m, int budget_m)
        : std::runtime_error("enumeration budget exceeded: m=" + std::to_string(requested_m) +
                             " > budget " + std::to_string(budget_m) +
                             " (raise the budget explicitly to proceed)"),
          requested(requested_m),
          budget(budget_m) {}
    int requested, budget;
};

/// One representative per isomorphism class of graphs with exactly m edges
/// and no isolated vertices, over every feasible vertex count. Grows graphs
/// edge by edge from K_2 with canonical-form deduplication per level; every
/// returned graph is canonically labeled and the list is sorted by canonical
/// form. Workers > 1 shards each level deterministically.
std::vector<Graph> enumerate_graphs(int m, const EnumerationOptions& opts = {});

using GraphPredicate = std::function<bool(const Graph&)>;

struct ScanRow {
    int m = 0;
    std::string graph6;
    double lambda = 0;
    bool h43_free = false;
    bool connected = false;
};
std::string scan_csv_header();
std::string to_csv(const ScanRow& row);

struct ExtremalRecord {
    int m = 0;
    std::vector<std::string> exclusions;
    Graph best;                // canonical labeling
    std::string best_graph6;   // == canonical form of best
    double lambda = 0;
    long scanned = 0;
    long h43_free_count = 0;
    double runtime_seconds = 0;
};

/// Scans every enumerated class, reporting each row through `sink` (when
/// set), and returns the spectral-radius maximizer among classes that satisfy
/// the predicate and are not excluded (exclusions are canonical forms).
/// Ties resolve to the smaller canonical form. Throws when no candidate
/// remains.
ExtremalRecord extremal_scan(int m, const std::set<std::string>& exclusions,
                             const GraphPredicate& predicate,
                             const EnumerationOptions& opts = {},
                             const PowerOptions& power = {},
                             const std::function<void(const ScanRow&)>& sink = nullptr);

/// Deterministic battery of H(4,3)-free rivals with exactly m edges (m odd):
/// the book graph, the theorem extremal graph, apex-star variants, stars,
/// double stars, a complete bipartite with a pendant, triangle-fan variants,
/// and seeded random members. Every member is verified H(4,3)-free with m
/// edges; duplicates are dropped by canonical form.
std::vector<Graph> rival_battery(int m, std::uint64_t seed = 20240901u);

struct TheoremRow {
    std::string graph6;
    double lambda = 0;
    bool is_book = false;
    bool is_extremal = false;  // isomorphic to theorem_extremal(m)
};

struct TheoremReport {
    int m = 0;
    bool battery_mode = false;
    bool observational = false;  // m below the theorem's range (odd m >= 58)
    double lambda_bound = 0;     // largest root of the theorem quartic
    std::string maximizer_graph6;
    double maximizer_lambda = 0;
    bool maximizer_is_extremal = false;
    bool pass = false;
    std::string message;
    std::vector<TheoremRow> rows;  // battery mode only
};

/// Checks the bound "every H(4,3)-free graph of odd size m other than the
/// book graph has spectral radius at most the theorem quartic's largest
/// root, attained only by the theorem extremal graph". Within the
/// enumeration budget this is a full scan; beyond it, the rival battery.
/// For m < 58 the result is recorded as observational.
TheoremReport verify_theorem_at(int m, bool force_battery = false,
                                const EnumerationOptions& opts = {},
                                const PowerOptions& power = {},
                                std::uint64_t seed = 20240901u);

}  // namespace spex
