#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spectral_chroma/bounds.hpp"
#include "spectral_chroma/graph.hpp"

namespace spectral_chroma {

/// 0.5 * n / log_b(n) with b = 1/(1-p); the o(1) term is dropped.
double bollobas_estimate(std::size_t n, double p);

/// Sample mean of one bound column plus its spread.
struct ColumnStats {
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
    std::size_t valid = 0;
};

struct RandomTableRow {
    std::size_t n = 0;
    double p = 0.0;
    ColumnStats hoffman, kolotilina1, kolotilina2;
    double bollobas = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed_base = 0;
    std::size_t regenerated = 0;  // edgeless draws replaced by an auxiliary seed
};

struct TableCell {
    std::size_t n;
    double p;
};

/// Sample i of every cell is G(n, p) with seed seed_base + i. An edgeless
/// draw is replaced using auxiliary seeds splitmix64(seed_base + i, k), k = 0, 1, ...
std::vector<RandomTableRow> random_table(const std::vector<TableCell>& cells, std::size_t samples,
                                         std::uint64_t seed_base);

struct ComparisonRow {
    std::string name;
    std::optional<BoundReport> report;
    std::optional<std::size_t> chi;  // oracle value, computed for n <= kComparisonOracleLimit
    std::string error;                // set when the spec could not be resolved
};

inline constexpr std::size_t kComparisonOracleLimit = 24;

/// Each entry is anything load_graph accepts. Failures become error rows.
std::vector<ComparisonRow> named_comparison(const std::vector<std::string>& specs);

/// Built-in comparison list; includes @<data>/no_perfect_matching.g6 when
/// that file exists.
std::vector<std::string> default_named_specs();

/// {graph, n, edges, bounds: [{id, value, best_m, valid}], chi?, display: {id: "x.y"}}
nlohmann::json report_json(const BoundReport& report, std::optional<std::size_t> chi = std::nullopt);
nlohmann::json comparison_json(const std::vector<ComparisonRow>& rows);
nlohmann::json table_json(const std::vector<RandomTableRow>& rows);
std::string table_csv(const std::vector<RandomTableRow>& rows);

/// Exhaustive soundness, dominance, and certification sweep.
struct CorpusCheckSummary {
    std::size_t graphs = 0;
    std::size_t bound_checks = 0;
    std::size_t soundness_violations = 0;
    std::size_t dominance_violations = 0;
    std::size_t chain_violations = 0;
    std::size_t conversion_failures = 0;
    std::size_t majorization_failures = 0;
    std::size_t loan_failures = 0;
    double worst_conversion_residual = 0.0;
    std::vector<std::string> failures;  // first few, "graph6: what"

    bool sound() const { return soundness_violations == 0; }
    bool certified() const { return conversion_failures == 0 && majorization_failures == 0 && loan_failures == 0; }
    bool dominance_ok() const { return dominance_violations == 0 && chain_violations == 0; }
    bool ok() const { return sound() && certified() && dominance_ok(); }
};

inline constexpr double kCorpusConversionLimit = 1e-10;

/// Graphs: every labeled graph on 1..min(max_n, 6) vertices, plus the
/// 7-vertex corpus when max_n >= 7.
std::vector<Graph> soundness_corpus(std::size_t max_n);
CorpusCheckSummary corpus_check(std::size_t max_n);
CorpusCheckSummary check_graphs(const std::vector<Graph>& graphs);

}  // namespace spectral_chroma
