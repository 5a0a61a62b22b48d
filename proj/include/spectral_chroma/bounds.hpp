#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectral_chroma/graph.hpp"
#include "spectral_chroma/linalg.hpp"

namespace spectral_chroma {

enum class BoundId {
    Hoffman,
    NikiforovHybrid,
    Kolotilina1,
    Kolotilina2,
    LOAN,
    GenHoffman,
    GenNikiforov,
    GenKolotilina1,
    GenKolotilina2,
    NormalizedHoffman,
    GenNormalizedHoffman,
    KolotilinaChain317,
    HansenLucas,
    Cvetkovic,
    IntegerC,
};

inline constexpr std::array<BoundId, 15> kAllBounds = {
    BoundId::Hoffman,           BoundId::NikiforovHybrid,      BoundId::Kolotilina1,
    BoundId::Kolotilina2,       BoundId::LOAN,                 BoundId::GenHoffman,
    BoundId::GenNikiforov,      BoundId::GenKolotilina1,       BoundId::GenKolotilina2,
    BoundId::NormalizedHoffman, BoundId::GenNormalizedHoffman, BoundId::KolotilinaChain317,
    BoundId::HansenLucas,       BoundId::Cvetkovic,            BoundId::IntegerC,
};

std::string_view to_string(BoundId id);
std::optional<BoundId> bound_from_string(std::string_view name);
bool is_generalized(BoundId id);

/// A lower bound on the chromatic number. Invalid values carry value 1.
struct BoundValue {
    BoundId id;
    double value = 1.0;
    std::size_t best_m = 1;
    bool valid = false;
};

/// Round half away from zero to one decimal.
double round_display(double value);
/// One-decimal display string, "-" for an invalid bound.
std::string display(const BoundValue& v);

// Admissible-m rule: a term whose denominator is <= PROPERTY_TOL is skipped;
// a sweep with no admissible term is invalid.

std::vector<BoundValue> classical_bounds(const Spectrum& adjacency, const Spectrum& laplacian,
                                         const Spectrum& signless);
BoundValue loan_bound(const Graph& g, const Spectrum& signless);
std::vector<BoundValue> generalized_bounds(const Spectrum& adjacency, const Spectrum& laplacian,
                                           const Spectrum& signless);
std::vector<BoundValue> normalized_bounds(const Spectrum& normalized_adjacency);
std::vector<BoundValue> chain_bounds(const Spectrum& adjacency, const Spectrum& laplacian,
                                     const Spectrum& signless, std::size_t n);

/// One term of a generalized bound at a fixed m.
struct SweepPoint {
    std::size_t m;
    double numerator;
    double denominator;
    bool admissible;
    double value;  // 1 + numerator / denominator when admissible
};

/// Per-m terms of GenHoffman, GenNikiforov, GenKolotilina1, GenKolotilina2
/// (from A, L, Q spectra) or GenNormalizedHoffman (pass the normalized
/// adjacency spectrum as `adjacency`; `laplacian`/`signless` are ignored).
std::vector<SweepPoint> sweep(BoundId id, const Spectrum& adjacency, const Spectrum& laplacian,
                              const Spectrum& signless);

/// Smallest-c search from the left-hand Ky Fan inequality. For every
/// candidate B and every m, c is scanned upward from 2 and the first c with
///   sum_{i<=m} lambda_i(B - A) >= sum_{i<=m} lambda_i(B + A/(c-1)) - PROPERTY_TOL
/// is recorded (n if none). The bound is the maximum over (B, m).
struct IntegerCSearch {
    BoundValue bound;
    std::size_t best_candidate = 0;              // index into the candidate list
    std::vector<std::vector<std::size_t>> minima;  // minima[b][m-1]
};

IntegerCSearch integer_c_search(const SymmetricMatrix& adjacency,
                                const std::vector<SymmetricMatrix>& candidates);
/// Candidates {0, D, -D}, in that order.
IntegerCSearch integer_c_search(const Graph& g);
std::vector<SymmetricMatrix> default_c_search_candidates(const Graph& g);

struct BoundReport {
    std::string graph;  // graph6 of the input
    std::size_t n = 0;
    std::size_t edges = 0;
    Spectrum adjacency, laplacian, signless;
    std::optional<Spectrum> normalized_adjacency;  // absent with isolated vertices
    std::vector<BoundValue> values;                // one per BoundId, kAllBounds order
    std::vector<std::string> rounded_display;      // parallel to values

    const BoundValue& get(BoundId id) const;
};

BoundReport full_report(const Graph& g);

}  // namespace spectral_chroma
