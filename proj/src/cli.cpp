#include "spectral_chroma/cli.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "spectral_chroma/bounds.hpp"
#include "spectral_chroma/certify.hpp"
#include "spectral_chroma/errors.hpp"
#include "spectral_chroma/experiments.hpp"
#include "spectral_chroma/oracle.hpp"
#include "spectral_chroma/tolerances.hpp"

namespace spectral_chroma::cli {

namespace {

struct Options {
    std::string input;
    bool json = false;
    bool csv = false;
    std::string bound;
    std::size_t colors = 0;
    std::string rows = "20:0.5,20:0.7,20:0.9,50:0.5,50:0.7,50:0.9";
    std::size_t samples = 15;
    std::uint64_t seed = 1;
    std::vector<std::string> named;
    std::size_t max_n = 7;
};

void print_report_table(std::ostream& out, const BoundReport& r, std::optional<std::size_t> chi) {
    fmt::print(out, "graph {}  n={}  E={}\n", r.graph, r.n, r.edges);
    for (std::size_t i = 0; i < r.values.size(); ++i) {
        const auto& v = r.values[i];
        if (is_generalized(v.id) && v.valid)
            fmt::print(out, "{:<22} {:>5}  (m={})\n", to_string(v.id), r.rounded_display[i], v.best_m);
        else
            fmt::print(out, "{:<22} {:>5}\n", to_string(v.id), r.rounded_display[i]);
    }
    if (chi) fmt::print(out, "{:<22} {:>5}\n", "chi", *chi);
}

std::vector<TableCell> parse_rows(const std::string& text) {
    std::vector<TableCell> cells;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw CLI::ValidationError("--rows", "expected n:p, got '" + item + "'");
        try {
            cells.push_back(TableCell{std::stoul(item.substr(0, colon)), std::stod(item.substr(colon + 1))});
        } catch (const std::logic_error&) {
            throw CLI::ValidationError("--rows", "expected n:p, got '" + item + "'");
        }
    }
    if (cells.empty()) throw CLI::ValidationError("--rows", "no rows given");
    return cells;
}

int cmd_bounds(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o.input);
    const BoundReport r = full_report(g);
    if (o.json)
        out << report_json(r).dump(2) << '\n';
    else
        print_report_table(out, r, std::nullopt);
    return kSuccess;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    const auto id = bound_from_string(o.bound);
    if (!id || !is_generalized(*id)) throw DomainError(fmt::format("--bound: '{}' is not a generalized bound", o.bound));
    const Graph g = load_graph(o.input);
    std::vector<SweepPoint> points;
    if (*id == BoundId::GenNormalizedHoffman) {
        const auto na = eigenvalues_sym(build_matrix(g, GraphMatrixKind::NormalizedAdjacency));
        points = sweep(*id, na, na, na);
    } else {
        const auto a = eigenvalues_sym(build_matrix(g, GraphMatrixKind::Adjacency));
        const auto l = eigenvalues_sym(build_matrix(g, GraphMatrixKind::Laplacian));
        const auto q = eigenvalues_sym(build_matrix(g, GraphMatrixKind::SignlessLaplacian));
        points = sweep(*id, a, l, q);
    }
    out << "m,numerator,denominator,admissible,value\n";
    for (const auto& p : points)
        fmt::print(out, "{},{},{},{},{}\n", p.m, p.numerator, p.denominator, p.admissible ? 1 : 0,
                   p.admissible ? fmt::format("{}", p.value) : std::string());
    return kSuccess;
}

int cmd_certify(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o.input);
    Coloring col;
    if (o.colors > 0) {
        auto found = find_coloring(g, o.colors);
        if (!found) throw DomainError(fmt::format("graph has no proper {}-coloring", o.colors));
        col = *found;
    } else {
        col = greedy_coloring(g);
    }
    col.c = std::max<std::uint32_t>(col.c, 2);
    const SymmetricMatrix a = build_matrix(g, GraphMatrixKind::Adjacency);

    bool ok = true;
    const auto cert = build_conversion(a, col);
    ok = ok && cert.within_tolerance();
    if (o.json) {
        auto j = to_json(cert);
        j["graph"] = emit_graph6(g);
        out << j.dump(2) << '\n';
    } else {
        fmt::print(out, "graph {}  colors={}\n", emit_graph6(g), col.c);
        fmt::print(out, "conversion residual {:.3e} (tol {:.3e}) {}\n", cert.residual, cert.tolerance,
                   cert.within_tolerance() ? "ok" : "FAIL");
    }
    const auto d = g.degrees();
    std::vector<double> neg(d.size());
    std::transform(d.begin(), d.end(), neg.begin(), [](double x) { return -x; });
    const std::pair<const char*, std::vector<double>> candidates[] = {
        {"0", std::vector<double>(d.size(), 0.0)}, {"D", d}, {"-D", neg}};
    for (const auto& [name, b] : candidates) {
        const auto r = verify_majorization_step(a, b, col);
        ok = ok && r.ok();
        if (!o.json)
            fmt::print(out, "majorization B={:<2} identity residual {:.3e} (tol {:.3e}) ky-fan {} {}\n", name,
                       r.identity_residual, r.identity_tolerance, r.spectral_ok ? "holds" : "violated",
                       r.ok() ? "ok" : "FAIL");
    }
    if (g.edge_count() > 0) {
        const auto r = verify_loan_identity(g, col);
        ok = ok && r.ok();
        if (!o.json)
            fmt::print(out, "loan identity residual {:.3e} (tol {:.3e}) v'Av={} 2E/n={} {}\n", r.identity_residual,
                       r.identity_tolerance, r.quadratic_form, r.average_degree, r.ok() ? "ok" : "FAIL");
    }
    return ok ? kSuccess : kVerification;
}

int cmd_chromatic(const Options& o, std::ostream& out) {
    const Graph g = load_graph(o.input);
    const auto r = chromatic_number(g);
    if (o.json) {
        out << nlohmann::json{{"graph", emit_graph6(g)}, {"chi", r.chi}, {"witness", r.witness.colors}}.dump(2)
            << '\n';
    } else {
        fmt::print(out, "chi {}\nwitness {}\n", r.chi, fmt::join(r.witness.colors, " "));
    }
    return kSuccess;
}

int cmd_random_table(const Options& o, std::ostream& out) {
    const auto rows = random_table(parse_rows(o.rows), o.samples, o.seed);
    if (o.json) {
        out << table_json(rows).dump(2) << '\n';
    } else if (o.csv) {
        out << table_csv(rows);
    } else {
        fmt::print(out, "{:>4} {:>5} {:>8} {:>12} {:>12} {:>9}\n", "n", "p", "Hoffman", "Kolotilina1",
                   "Kolotilina2", "Bollobas");
        for (const auto& r : rows) {
            const std::string b = std::isnan(r.bollobas) ? "-" : fmt::format("{:.1f}", round_display(r.bollobas));
            fmt::print(out, "{:>4} {:>5} {:>8.1f} {:>12.1f} {:>12.1f} {:>9}\n", r.n, r.p, round_display(r.hoffman.mean),
                       round_display(r.kolotilina1.mean), round_display(r.kolotilina2.mean), b);
        }
    }
    return kSuccess;
}

int cmd_compare(const Options& o, std::ostream& out) {
    std::vector<std::string> specs;
    for (const auto& name : o.named) {
        if (name == "default") {
            auto d = default_named_specs();
            specs.insert(specs.end(), d.begin(), d.end());
        } else {
            specs.push_back(name);
        }
    }
    const auto rows = named_comparison(specs);
    if (o.json) {
        out << comparison_json(rows).dump(2) << '\n';
    } else {
        for (const auto& row : rows) {
            fmt::print(out, "== {}\n", row.name);
            if (row.report)
                print_report_table(out, *row.report, row.chi);
            else
                fmt::print(out, "error: {}\n", row.error);
        }
    }
    const bool any_error = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return !r.report; });
    return any_error ? kComputation : kSuccess;
}

int cmd_corpus_check(const Options& o, std::ostream& out) {
    const auto s = corpus_check(o.max_n);
    fmt::print(out, "graphs {}\nbound checks {}\n", s.graphs, s.bound_checks);
    fmt::print(out, "soundness violations {}\ndominance violations {}\nchain violations {}\n", s.soundness_violations,
               s.dominance_violations, s.chain_violations);
    fmt::print(out, "conversion failures {} (worst residual {:.3e})\nmajorization failures {}\nloan failures {}\n",
               s.conversion_failures, s.worst_conversion_residual, s.majorization_failures, s.loan_failures);
    for (const auto& f : s.failures) fmt::print(out, "  {}\n", f);
    return s.ok() ? kSuccess : kVerification;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral lower bounds on the chromatic number", "spectral-chroma"};
    app.require_subcommand(1, 1);
    Options o;
    const std::string input_help = "graph6 string, @file, or gen:family(args)";

    auto* bounds = app.add_subcommand("bounds", "All spectral bounds for one graph");
    bounds->add_option("input", o.input, input_help)->required();
    bounds->add_flag("--json", o.json, "JSON output");

    auto* sweep_cmd = app.add_subcommand("sweep", "Per-m values of a generalized bound (CSV)");
    sweep_cmd->add_option("input", o.input, input_help)->required();
    sweep_cmd->add_option("--bound", o.bound, "GenHoffman, GenNikiforov, GenKolotilina1, ...")->required();

    auto* certify = app.add_subcommand("certify", "Constructive conversion and majorization checks");
    certify->add_option("input", o.input, input_help)->required();
    certify->add_option("--colors", o.colors, "use an exact k-coloring instead of greedy");
    certify->add_flag("--json", o.json, "emit the certificate as JSON");

    auto* chromatic = app.add_subcommand("chromatic", "Exact chromatic number with witness");
    chromatic->add_option("input", o.input, input_help)->required();
    chromatic->add_flag("--json", o.json, "JSON output");

    auto* table = app.add_subcommand("random-table", "Averaged bounds over G(n,p) samples");
    table->add_option("--rows", o.rows, "comma-separated n:p cells");
    table->add_option("--samples", o.samples, "graphs per cell")->check(CLI::PositiveNumber);
    table->add_option("--seed", o.seed, "seed base");
    auto* table_json_flag = table->add_flag("--json", o.json, "JSON output");
    table->add_flag("--csv", o.csv, "CSV output")->excludes(table_json_flag);

    auto* compare = app.add_subcommand("compare", "Bound comparison over named graphs");
    compare->add_option("--named", o.named, "'default' and/or graph inputs")->required();
    compare->add_flag("--json", o.json, "JSON output");

    auto* corpus = app.add_subcommand("corpus-check", "Exhaustive soundness and certification sweep");
    corpus->add_option("--max-n", o.max_n, "largest order")->check(CLI::Range(1, 7));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (bounds->parsed()) return cmd_bounds(o, out);
        if (sweep_cmd->parsed()) return cmd_sweep(o, out);
        if (certify->parsed()) return cmd_certify(o, out);
        if (chromatic->parsed()) return cmd_chromatic(o, out);
        if (table->parsed()) return cmd_random_table(o, out);
        if (compare->parsed()) return cmd_compare(o, out);
        if (corpus->parsed()) return cmd_corpus_check(o, out);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kComputation;
    }
    return kUsage;
}

}  // namespace spectral_chroma::cli
