#include "spectral_chroma/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "spectral_chroma/errors.hpp"
#include "spectral_chroma/tolerances.hpp"

namespace spectral_chroma {

std::string_view to_string(BoundId id) {
    switch (id) {
        case BoundId::Hoffman: return "Hoffman";
        case BoundId::NikiforovHybrid: return "NikiforovHybrid";
        case BoundId::Kolotilina1: return "Kolotilina1";
        case BoundId::Kolotilina2: return "Kolotilina2";
        case BoundId::LOAN: return "LOAN";
        case BoundId::GenHoffman: return "GenHoffman";
        case BoundId::GenNikiforov: return "GenNikiforov";
        case BoundId::GenKolotilina1: return "GenKolotilina1";
        case BoundId::GenKolotilina2: return "GenKolotilina2";
        case BoundId::NormalizedHoffman: return "NormalizedHoffman";
        case BoundId::GenNormalizedHoffman: return "GenNormalizedHoffman";
        case BoundId::KolotilinaChain317: return "KolotilinaChain317";
        case BoundId::HansenLucas: return "HansenLucas";
        case BoundId::Cvetkovic: return "Cvetkovic";
        case BoundId::IntegerC: return "IntegerC";
    }
    return "?";
}

std::optional<BoundId> bound_from_string(std::string_view name) {
    for (BoundId id : kAllBounds)
        if (to_string(id) == name) return id;
    return std::nullopt;
}

bool is_generalized(BoundId id) {
    return id == BoundId::GenHoffman || id == BoundId::GenNikiforov || id == BoundId::GenKolotilina1 ||
           id == BoundId::GenKolotilina2 || id == BoundId::GenNormalizedHoffman;
}

double round_display(double value) { return std::round(value * 10.0) / 10.0; }

std::string display(const BoundValue& v) {
    if (!v.valid) return "-";
    return fmt::format("{:.1f}", round_display(v.value));
}

// --- sweeps -----------------------------------------------------------------

namespace {

void require_same_order(const Spectrum& a, const Spectrum& b, const Spectrum& c) {
    if (a.size() == 0 || a.size() != b.size() || a.size() != c.size())
        throw DomainError("bounds: spectra must be non-empty and of equal length");
}

BoundValue best_of(BoundId id, const std::vector<SweepPoint>& points) {
    BoundValue best{id, 1.0, 1, false};
    for (const SweepPoint& p : points) {
        if (!p.admissible) continue;
        if (!best.valid || p.value > best.value) best = BoundValue{id, p.value, p.m, true};
    }
    return best;
}

BoundValue at_m1(BoundId classical_id, const std::vector<SweepPoint>& points) {
    const SweepPoint& p = points.front();
    return p.admissible ? BoundValue{classical_id, p.value, 1, true} : BoundValue{classical_id, 1.0, 1, false};
}

}  // namespace

std::vector<SweepPoint> sweep(BoundId id, const Spectrum& adjacency, const Spectrum& laplacian,
                              const Spectrum& signless) {
    const std::size_t n = adjacency.size();
    if (n == 0) throw DomainError("sweep: empty spectrum");
    const bool needs_lq = id != BoundId::GenHoffman && id != BoundId::GenNormalizedHoffman;
    if (needs_lq) require_same_order(adjacency, laplacian, signless);
    if (!is_generalized(id))
        throw DomainError(fmt::format("sweep: {} is not a generalized bound", to_string(id)));

    const auto& mu = adjacency.values;
    std::vector<SweepPoint> points;
    points.reserve(n);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t tail = n - 1 - i;
        num += mu[i];
        switch (id) {
            case BoundId::GenHoffman:
            case BoundId::GenNormalizedHoffman: den += -mu[tail]; break;
            case BoundId::GenNikiforov: den += laplacian.values[i] - mu[i]; break;
            case BoundId::GenKolotilina1: den += mu[i] - signless.values[i] + laplacian.values[i]; break;
            case BoundId::GenKolotilina2: den += mu[i] - signless.values[tail] + laplacian.values[tail]; break;
            default: break;
        }
        const bool ok = den > PROPERTY_TOL;
        points.push_back(SweepPoint{i + 1, num, den, ok, ok ? 1.0 + num / den : 1.0});
    }
    return points;
}

std::vector<BoundValue> classical_bounds(const Spectrum& adjacency, const Spectrum& laplacian,
                                         const Spectrum& signless) {
    require_same_order(adjacency, laplacian, signless);
    // m = 1 slices of the generalized sweeps, so the two agree exactly.
    std::vector<BoundValue> out = {
        at_m1(BoundId::Hoffman, sweep(BoundId::GenHoffman, adjacency, laplacian, signless)),
        at_m1(BoundId::NikiforovHybrid, sweep(BoundId::GenNikiforov, adjacency, laplacian, signless)),
        at_m1(BoundId::Kolotilina1, sweep(BoundId::GenKolotilina1, adjacency, laplacian, signless)),
        at_m1(BoundId::Kolotilina2, sweep(BoundId::GenKolotilina2, adjacency, laplacian, signless)),
    };
    if (adjacency.largest() <= PROPERTY_TOL)
        for (auto& v : out) v = BoundValue{v.id, 1.0, 1, false};
    return out;
}

BoundValue loan_bound(const Graph& g, const Spectrum& signless) {
    BoundValue v{BoundId::LOAN, 1.0, 1, false};
    if (signless.size() != g.order()) throw DomainError("loan_bound: spectrum does not match graph order");
    const double two_e = 2.0 * static_cast<double>(g.edge_count());
    if (g.edge_count() == 0) return v;
    const double den = two_e - static_cast<double>(g.order()) * signless.smallest();
    if (den <= PROPERTY_TOL) return v;
    v.value = 1.0 + two_e / den;
    v.valid = true;
    return v;
}

std::vector<BoundValue> generalized_bounds(const Spectrum& adjacency, const Spectrum& laplacian,
                                           const Spectrum& signless) {
    require_same_order(adjacency, laplacian, signless);
    std::vector<BoundValue> out;
    for (BoundId id : {BoundId::GenHoffman, BoundId::GenNikiforov, BoundId::GenKolotilina1,
                       BoundId::GenKolotilina2})
        out.push_back(best_of(id, sweep(id, adjacency, laplacian, signless)));
    if (adjacency.largest() <= PROPERTY_TOL)
        for (auto& v : out) v = BoundValue{v.id, 1.0, 1, false};
    return out;
}

std::vector<BoundValue> normalized_bounds(const Spectrum& normalized_adjacency) {
    const auto points = sweep(BoundId::GenNormalizedHoffman, normalized_adjacency, normalized_adjacency,
                              normalized_adjacency);
    BoundValue classical{BoundId::NormalizedHoffman, 1.0, 1, false};
    BoundValue general{BoundId::GenNormalizedHoffman, 1.0, 1, false};
    if (normalized_adjacency.smallest() < -PROPERTY_TOL) {
        classical = at_m1(BoundId::NormalizedHoffman, points);
        general = best_of(BoundId::GenNormalizedHoffman, points);
    }
    return {classical, general};
}

std::vector<BoundValue> chain_bounds(const Spectrum& adjacency, const Spectrum& laplacian,
                                     const Spectrum& signless, std::size_t n) {
    require_same_order(adjacency, laplacian, signless);
    const double mu1 = adjacency.largest();
    const double theta1 = laplacian.largest();
    const double delta1 = signless.largest();
    const double order = static_cast<double>(n);
    auto make = [](BoundId id, double num, double den) {
        if (num <= PROPERTY_TOL || den <= PROPERTY_TOL) return BoundValue{id, 1.0, 1, false};
        return BoundValue{id, 1.0 + num / den, 1, true};
    };
    return {
        make(BoundId::KolotilinaChain317, delta1, 2.0 * theta1 - delta1),
        make(BoundId::HansenLucas, delta1, 2.0 * order - delta1),
        make(BoundId::Cvetkovic, mu1, order - mu1),
    };
}

// --- integer c search -------------------------------------------------------

std::vector<SymmetricMatrix> default_c_search_candidates(const Graph& g) {
    const auto d = g.degrees();
    std::vector<double> neg(d.size());
    std::transform(d.begin(), d.end(), neg.begin(), [](double x) { return -x; });
    return {SymmetricMatrix(g.order()), SymmetricMatrix::diagonal(d), SymmetricMatrix::diagonal(neg)};
}

IntegerCSearch integer_c_search(const SymmetricMatrix& adjacency, const std::vector<SymmetricMatrix>& candidates) {
    const std::size_t n = adjacency.size();
    IntegerCSearch result;
    result.bound = BoundValue{BoundId::IntegerC, 1.0, 1, false};
    if (n == 0) throw DomainError("integer_c_search: empty matrix");
    if (candidates.empty()) throw DomainError("integer_c_search: no B candidates");
    bool has_edge = false;
    for (double x : adjacency.data()) has_edge = has_edge || x != 0.0;
    if (!has_edge || n < 2) return result;

    std::size_t best = 0;
    for (std::size_t b = 0; b < candidates.size(); ++b) {
        const SymmetricMatrix& B = candidates[b];
        if (B.size() != n) throw DomainError("integer_c_search: candidate dimension mismatch");
        const KyFanSums left(eigenvalues_sym(B - adjacency));
        std::vector<std::size_t> minima(n, 0);
        std::size_t unresolved = n;
        for (std::size_t c = 2; c <= n && unresolved > 0; ++c) {
            const KyFanSums right(eigenvalues_sym(B + (1.0 / static_cast<double>(c - 1)) * adjacency));
            for (std::size_t m = 1; m <= n; ++m) {
                if (minima[m - 1] != 0) continue;
                if (left(m) >= right(m) - PROPERTY_TOL) {
                    minima[m - 1] = c;
                    --unresolved;
                }
            }
        }
        for (auto& c : minima)
            if (c == 0) c = n;
        for (std::size_t m = 1; m <= n; ++m) {
            if (minima[m - 1] > best) {
                best = minima[m - 1];
                result.best_candidate = b;
                result.bound.best_m = m;
            }
        }
        result.minima.push_back(std::move(minima));
    }
    result.bound.value = static_cast<double>(best);
    result.bound.valid = true;
    return result;
}

IntegerCSearch integer_c_search(const Graph& g) {
    return integer_c_search(build_matrix(g, GraphMatrixKind::Adjacency), default_c_search_candidates(g));
}

// --- report -----------------------------------------------------------------

const BoundValue& BoundReport::get(BoundId id) const {
    for (const auto& v : values)
        if (v.id == id) return v;
    throw std::out_of_range(fmt::format("report has no value for {}", to_string(id)));
}

BoundReport full_report(const Graph& g) {
    BoundReport r;
    r.graph = emit_graph6(g);
    r.n = g.order();
    r.edges = g.edge_count();
    const SymmetricMatrix a = build_matrix(g, GraphMatrixKind::Adjacency);
    r.adjacency = eigenvalues_sym(a, GraphMatrixKind::Adjacency);
    r.laplacian = eigenvalues_sym(build_matrix(g, GraphMatrixKind::Laplacian), GraphMatrixKind::Laplacian);
    r.signless = eigenvalues_sym(build_matrix(g, GraphMatrixKind::SignlessLaplacian),
                                 GraphMatrixKind::SignlessLaplacian);
    if (!g.has_isolated_vertex())
        r.normalized_adjacency = eigenvalues_sym(build_matrix(g, GraphMatrixKind::NormalizedAdjacency),
                                                 GraphMatrixKind::NormalizedAdjacency);

    std::vector<BoundValue> all;
    if (g.edge_count() > 0) {
        auto add = [&all](const std::vector<BoundValue>& vs) { all.insert(all.end(), vs.begin(), vs.end()); };
        add(classical_bounds(r.adjacency, r.laplacian, r.signless));
        all.push_back(loan_bound(g, r.signless));
        add(generalized_bounds(r.adjacency, r.laplacian, r.signless));
        if (r.normalized_adjacency) add(normalized_bounds(*r.normalized_adjacency));
        add(chain_bounds(r.adjacency, r.laplacian, r.signless, r.n));
        all.push_back(integer_c_search(a, default_c_search_candidates(g)).bound);
    }
    for (BoundId id : kAllBounds) {
        auto it = std::find_if(all.begin(), all.end(), [id](const BoundValue& v) { return v.id == id; });
        r.values.push_back(it != all.end() ? *it : BoundValue{id, 1.0, 1, false});
        r.rounded_display.push_back(display(r.values.back()));
    }
    return r;
}

}  // namespace spectral_chroma
