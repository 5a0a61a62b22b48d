#include "spectral_chroma/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

#include "spectral_chroma/certify.hpp"
#include "spectral_chroma/errors.hpp"
#include "spectral_chroma/oracle.hpp"
#include "spectral_chroma/parallel.hpp"
#include "spectral_chroma/tolerances.hpp"

namespace spectral_chroma {

double bollobas_estimate(std::size_t n, double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError(fmt::format("bollobas_estimate: p = {} outside (0, 1)", p));
    if (n < 2) throw DomainError("bollobas_estimate: n must be at least 2");
    const double nd = static_cast<double>(n);
    const double log_b_n = std::log(nd) / std::log(1.0 / (1.0 - p));
    return 0.5 * nd / log_b_n;
}

// --- random table -----------------------------------------------------------

namespace {

struct SampleBounds {
    BoundValue hoffman, kolotilina1, kolotilina2;
    bool regenerated = false;
};

SampleBounds sample_bounds(std::size_t n, double p, std::uint64_t seed) {
    SampleBounds out;
    Graph g = random_gnp(n, p, seed);
    for (std::uint64_t k = 0; g.edge_count() == 0 && p > 0.0; ++k) {
        g = random_gnp(n, p, splitmix64(seed, k));
        out.regenerated = true;
    }
    const auto a = eigenvalues_sym(build_matrix(g, GraphMatrixKind::Adjacency), GraphMatrixKind::Adjacency);
    const auto l = eigenvalues_sym(build_matrix(g, GraphMatrixKind::Laplacian), GraphMatrixKind::Laplacian);
    const auto q = eigenvalues_sym(build_matrix(g, GraphMatrixKind::SignlessLaplacian),
                                   GraphMatrixKind::SignlessLaplacian);
    const auto classical = classical_bounds(a, l, q);
    out.hoffman = classical[0];
    out.kolotilina1 = classical[2];
    out.kolotilina2 = classical[3];
    return out;
}

ColumnStats column(const std::vector<SampleBounds>& samples, BoundValue SampleBounds::*field) {
    ColumnStats s;
    double sum = 0.0;
    for (const auto& sample : samples) {
        const BoundValue& v = sample.*field;
        if (!v.valid) continue;
        if (s.valid == 0) s.min = s.max = v.value;
        s.min = std::min(s.min, v.value);
        s.max = std::max(s.max, v.value);
        sum += v.value;
        ++s.valid;
    }
    s.mean = s.valid > 0 ? sum / static_cast<double>(s.valid) : 0.0;
    return s;
}

}  // namespace

std::vector<RandomTableRow> random_table(const std::vector<TableCell>& cells, std::size_t samples,
                                         std::uint64_t seed_base) {
    if (samples == 0) throw DomainError("random_table: samples must be at least 1");
    std::vector<RandomTableRow> rows;
    for (const TableCell& cell : cells) {
        if (!(cell.p > 0.0 && cell.p <= 1.0))
            throw DomainError(fmt::format("random_table: p = {} must lie in (0, 1]", cell.p));
        if (cell.n < 2) throw DomainError("random_table: n must be at least 2");
        std::vector<SampleBounds> results(samples);
        parallel_for(samples, [&](std::size_t i) { results[i] = sample_bounds(cell.n, cell.p, seed_base + i); });

        RandomTableRow row;
        row.n = cell.n;
        row.p = cell.p;
        row.samples = samples;
        row.seed_base = seed_base;
        row.hoffman = column(results, &SampleBounds::hoffman);
        row.kolotilina1 = column(results, &SampleBounds::kolotilina1);
        row.kolotilina2 = column(results, &SampleBounds::kolotilina2);
        row.regenerated = static_cast<std::size_t>(
            std::count_if(results.begin(), results.end(), [](const auto& r) { return r.regenerated; }));
        row.bollobas = cell.p < 1.0 ? bollobas_estimate(cell.n, cell.p) : std::nan("");
        rows.push_back(row);
    }
    return rows;
}

std::string table_csv(const std::vector<RandomTableRow>& rows) {
    std::string out = "n,p,samples,seed_base,hoffman,kolotilina1,kolotilina2,bollobas\n";
    for (const auto& r : rows)
        out += fmt::format("{},{},{},{},{},{},{},{}\n", r.n, r.p, r.samples, r.seed_base, r.hoffman.mean,
                           r.kolotilina1.mean, r.kolotilina2.mean, r.bollobas);
    return out;
}

nlohmann::json table_json(const std::vector<RandomTableRow>& rows) {
    auto stats = [](const ColumnStats& s) {
        return nlohmann::json{{"mean", s.mean}, {"min", s.min}, {"max", s.max}, {"valid", s.valid},
                              {"display", fmt::format("{:.1f}", round_display(s.mean))}};
    };
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json bollobas = std::isnan(r.bollobas) ? nlohmann::json(nullptr) : nlohmann::json(r.bollobas);
        out.push_back({{"n", r.n},
                       {"p", r.p},
                       {"samples", r.samples},
                       {"seed_base", r.seed_base},
                       {"regenerated", r.regenerated},
                       {"hoffman", stats(r.hoffman)},
                       {"kolotilina1", stats(r.kolotilina1)},
                       {"kolotilina2", stats(r.kolotilina2)},
                       {"bollobas", bollobas}});
    }
    return out;
}

// --- named comparison -------------------------------------------------------

std::vector<std::string> default_named_specs() {
    std::vector<std::string> specs = {
        "gen:circulant(16;1,7,8)", "gen:barbell(8)", "gen:sun(8)",        "gen:windmill(3,6)",
        "gen:petersen",            "gen:grotzsch",   "gen:complete_multipartite(2,2,2)",
    };
    const auto npm = corpus_directory() / "no_perfect_matching.g6";
    if (std::filesystem::exists(npm)) specs.push_back("@" + npm.string());
    return specs;
}

std::vector<ComparisonRow> named_comparison(const std::vector<std::string>& specs) {
    std::vector<ComparisonRow> rows(specs.size());
    parallel_for(specs.size(), [&](std::size_t i) {
        ComparisonRow& row = rows[i];
        row.name = specs[i];
        try {
            const Graph g = load_graph(specs[i]);
            row.report = full_report(g);
            if (g.order() <= kComparisonOracleLimit) row.chi = chromatic_number(g).chi;
        } catch (const std::exception& e) {
            row.report.reset();
            row.error = e.what();
        }
    });
    return rows;
}

nlohmann::json report_json(const BoundReport& report, std::optional<std::size_t> chi) {
    nlohmann::json bounds = nlohmann::json::array();
    nlohmann::json disp = nlohmann::json::object();
    for (std::size_t i = 0; i < report.values.size(); ++i) {
        const auto& v = report.values[i];
        bounds.push_back({{"id", std::string(to_string(v.id))}, {"value", v.value}, {"best_m", v.best_m},
                          {"valid", v.valid}});
        disp[std::string(to_string(v.id))] = report.rounded_display[i];
    }
    nlohmann::json out = {{"graph", report.graph}, {"n", report.n}, {"edges", report.edges},
                          {"bounds", std::move(bounds)}, {"display", std::move(disp)}};
    if (chi) out["chi"] = *chi;
    return out;
}

nlohmann::json comparison_json(const std::vector<ComparisonRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows) {
        if (row.report) {
            auto j = report_json(*row.report, row.chi);
            j["name"] = row.name;
            out.push_back(std::move(j));
        } else {
            out.push_back({{"name", row.name}, {"error", row.error}});
        }
    }
    return out;
}

// --- corpus check -----------------------------------------------------------

std::vector<Graph> soundness_corpus(std::size_t max_n) {
    if (max_n < 1 || max_n > kMaxCorpusOrder)
        throw DomainError(fmt::format("corpus order must lie in [1, {}]", kMaxCorpusOrder));
    std::vector<Graph> graphs;
    for (std::size_t n = 1; n <= std::min(max_n, kMaxLabeledOrder); ++n) {
        auto batch = labeled_graphs(n);
        graphs.insert(graphs.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
    }
    if (max_n >= 7) {
        auto batch = all_graphs(7);
        graphs.insert(graphs.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
    }
    return graphs;
}

namespace {

struct GraphCheck {
    std::size_t bound_checks = 0;
    std::size_t soundness = 0, dominance = 0, chain = 0, conversion = 0, majorization = 0, loan = 0;
    double conversion_residual = 0.0;
    std::vector<std::string> notes;
};

GraphCheck check_one(const Graph& g) {
    GraphCheck out;
    const std::string id = emit_graph6(g);
    auto note = [&](const std::string& what) {
        if (out.notes.size() < 4) out.notes.push_back(id + ": " + what);
    };

    const BoundReport report = full_report(g);
    const std::size_t chi = chromatic_number(g).chi;
    for (const auto& v : report.values) {
        if (!v.valid) continue;
        ++out.bound_checks;
        if (std::ceil(v.value - SOUNDNESS_SLACK) > static_cast<double>(chi)) {
            ++out.soundness;
            note(fmt::format("{} = {} exceeds chi = {}", to_string(v.id), v.value, chi));
        }
    }

    auto ge = [&](BoundId hi, BoundId lo, std::size_t& counter) {
        const auto& a = report.get(hi);
        const auto& b = report.get(lo);
        if (a.valid && b.valid && a.value < b.value - PROPERTY_TOL) {
            ++counter;
            note(fmt::format("{} = {} below {} = {}", to_string(hi), a.value, to_string(lo), b.value));
        }
    };
    ge(BoundId::Kolotilina1, BoundId::NikiforovHybrid, out.dominance);
    ge(BoundId::Kolotilina1, BoundId::KolotilinaChain317, out.chain);
    ge(BoundId::KolotilinaChain317, BoundId::HansenLucas, out.chain);
    ge(BoundId::HansenLucas, BoundId::Cvetkovic, out.chain);
    if (g.edge_count() > 0) {
        const auto k1 = sweep(BoundId::GenKolotilina1, report.adjacency, report.laplacian, report.signless);
        const auto nk = sweep(BoundId::GenNikiforov, report.adjacency, report.laplacian, report.signless);
        for (std::size_t i = 0; i < k1.size(); ++i)
            if (k1[i].admissible && nk[i].admissible && k1[i].value < nk[i].value - PROPERTY_TOL) {
                ++out.dominance;
                note(fmt::format("GenKolotilina1 below GenNikiforov at m = {}", i + 1));
            }
    }

    Coloring col = greedy_coloring(g);
    col.c = std::max<std::uint32_t>(col.c, 2);
    const SymmetricMatrix a = build_matrix(g, GraphMatrixKind::Adjacency);
    const auto cert = build_conversion(a, col);
    out.conversion_residual = cert.residual;
    if (!(cert.residual < kCorpusConversionLimit)) {
        ++out.conversion;
        note(fmt::format("conversion residual {}", cert.residual));
    }
    const auto d = g.degrees();
    std::vector<double> neg(d.size());
    std::transform(d.begin(), d.end(), neg.begin(), [](double x) { return -x; });
    for (const auto& b : {std::vector<double>(d.size(), 0.0), d, neg}) {
        if (!verify_majorization_step(a, b, col).ok()) {
            ++out.majorization;
            note("majorization step failed");
        }
    }
    if (g.edge_count() > 0 && !verify_loan_identity(g, col).ok()) {
        ++out.loan;
        note("LOAN identity failed");
    }
    return out;
}

}  // namespace

CorpusCheckSummary check_graphs(const std::vector<Graph>& graphs) {
    std::vector<GraphCheck> results(graphs.size());
    parallel_for(graphs.size(), [&](std::size_t i) { results[i] = check_one(graphs[i]); });
    CorpusCheckSummary s;
    s.graphs = graphs.size();
    for (const auto& r : results) {
        s.bound_checks += r.bound_checks;
        s.soundness_violations += r.soundness;
        s.dominance_violations += r.dominance;
        s.chain_violations += r.chain;
        s.conversion_failures += r.conversion;
        s.majorization_failures += r.majorization;
        s.loan_failures += r.loan;
        s.worst_conversion_residual = std::max(s.worst_conversion_residual, r.conversion_residual);
        for (const auto& n : r.notes)
            if (s.failures.size() < 20) s.failures.push_back(n);
    }
    return s;
}

CorpusCheckSummary corpus_check(std::size_t max_n) { return check_graphs(soundness_corpus(max_n)); }

}  // namespace spectral_chroma
