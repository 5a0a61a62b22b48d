#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "spectral_chroma/coloring.hpp"
#include "spectral_chroma/graph.hpp"
#include "spectral_chroma/linalg.hpp"

namespace spectral_chroma {

/// exp(2 pi i * numerator / denominator), with the exponent reduced first so
/// that multiples of the denominator give exactly 1.
Complex root_of_unity(std::uint64_t numerator, std::uint64_t denominator);

/// Diagonal unitaries U_s = diag(omega^{s * color_k}), s = 1..c, omega =
/// exp(2 pi i / c). U_c is exactly the identity.
struct ColoringCertificate {
    Coloring coloring;
    std::vector<ComplexMatrix> unitaries;
    double residual = 0.0;  // |sum_s U_s^dagger A U_s|_F
    double tolerance = 0.0;  // 1e-9 * c * |A|_F
    bool within_tolerance() const { return residual <= tolerance; }
};

std::vector<ComplexMatrix> coloring_unitaries(const Coloring& col);

/// Residual of the conversion sum for any coloring, proper or not.
double conversion_residual(const SymmetricMatrix& adjacency, const Coloring& col);

/// Throws DomainError when `col` is not a proper coloring of the graph of
/// `adjacency` (nonzero off-diagonal entries are edges) or when c < 2.
ColoringCertificate build_conversion(const SymmetricMatrix& adjacency, const Coloring& col);

/// JSON export. Phases are exact rationals "(s*color mod c)/c" in turns.
nlohmann::json to_json(const ColoringCertificate& cert);
/// Exact re-check of an exported certificate against a graph: phases must
/// follow s*color_k mod c for a proper coloring, row c being the identity.
bool recheck_certificate(const nlohmann::json& cert, const Graph& g);

struct MajorizationStepReport {
    double identity_residual = 0.0;
    double identity_tolerance = 0.0;
    bool identity_ok = false;
    std::vector<double> lhs;  // Ky Fan sums of B - A, m = 1..n
    std::vector<double> rhs;  // Ky Fan sums of B + A/(c-1)
    bool spectral_ok = false;
    bool ok() const { return identity_ok && spectral_ok; }
};

/// Checks sum_{s<c} U_s^dagger (B - A) U_s = (c-1) B + A and the Ky Fan
/// consequence for every m. `b_diagonal` holds the diagonal of B.
MajorizationStepReport verify_majorization_step(const SymmetricMatrix& adjacency,
                                                const std::vector<double>& b_diagonal, const Coloring& col);

struct LoanIdentityReport {
    double identity_residual = 0.0;  // |A - ((c-1)D - sum_{s<c} U_s Q U_s^dagger)|_F
    double identity_tolerance = 0.0;
    bool identity_ok = false;
    double quadratic_form = 0.0;  // v^dagger A v
    double average_degree = 0.0;  // 2E/n
    bool quadratic_ok = false;
    std::vector<double> conjugated_forms;  // v^dagger U_s Q U_s^dagger v, s = 1..c-1
    double smallest_signless = 0.0;
    bool forms_ok = false;
    bool inequality_ok = false;
    bool ok() const { return identity_ok && quadratic_ok && forms_ok && inequality_ok; }
};

LoanIdentityReport verify_loan_identity(const Graph& g, const Coloring& col);

/// n vectors of dimension d with unit-modulus entries.
struct OrthoRepresentation {
    std::vector<std::vector<Complex>> vectors;
};

struct OrthoCheck {
    bool inner_products_ok = false;  // |<psi_k, psi_l>| <= 1e-9 d on every edge
    bool unitary_identities_ok = false;
    double worst_inner_product = 0.0;
    double identity_defect = 0.0;  // |sum_s U_s^dagger U_s - d I|_F
    bool valid() const { return inner_products_ok && unitary_identities_ok; }
    bool agree() const { return inner_products_ok == unitary_identities_ok; }
};

OrthoCheck check_ortho_representation(const SymmetricMatrix& adjacency, const OrthoRepresentation& rep);
/// psi_k = (omega^{color_k * 1}, ..., omega^{color_k * c}).
OrthoRepresentation representation_from_coloring(const Coloring& col);

/// Orthogonal projectors summing to the identity, plus a matrix to pinch.
struct PinchingInstance {
    std::vector<ComplexMatrix> projectors;
    ComplexMatrix test_matrix;
};

/// Throws DomainError unless every projector is Hermitian and idempotent and
/// they sum to I, all within PROJECTOR_TOL.
void validate(const PinchingInstance& inst);

/// sum_a P_a X P_a
ComplexMatrix pinch(const PinchingInstance& inst);
/// (1/c) sum_s U_s X U_s^dagger with U_s = sum_a omega^{a s} P_a.
ComplexMatrix pinch_via_unitaries(const PinchingInstance& inst);

struct CorollaryCheck {
    double lhs = 0.0;  // Ky Fan m-sum of X
    double rhs = 0.0;  // Ky Fan m-sum of (c/(c-1)) C(X) - (1/(c-1)) X
    bool holds = false;
};

CorollaryCheck pinching_corollary_check(const PinchingInstance& inst, std::size_t m);

/// Coordinate projectors onto the color classes of `col`.
std::vector<ComplexMatrix> coloring_projectors(const Coloring& col);
/// Projectors onto consecutive blocks of a random orthonormal basis of C^n.
std::vector<ComplexMatrix> random_projector_family(std::size_t n, const std::vector<std::size_t>& block_sizes,
                                                   std::uint64_t seed);

}  // namespace spectral_chroma
