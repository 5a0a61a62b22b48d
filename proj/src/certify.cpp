#include "spectral_chroma/certify.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <fmt/format.h>

#include "spectral_chroma/errors.hpp"
#include "spectral_chroma/tolerances.hpp"

namespace spectral_chroma {

Complex root_of_unity(std::uint64_t numerator, std::uint64_t denominator) {
    const std::uint64_t r = numerator % denominator;
    if (r == 0) return {1.0, 0.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(denominator));
}

namespace {

void require_coloring_of(const SymmetricMatrix& a, const Coloring& col) {
    const std::size_t n = a.size();
    if (col.colors.size() != n)
        throw DomainError(fmt::format("coloring has {} entries for a {}x{} matrix", col.colors.size(), n, n));
    if (col.c < 2) throw DomainError("conversion needs c >= 2 colors");
    for (std::size_t v = 0; v < n; ++v)
        if (col.colors[v] >= col.c)
            throw DomainError(fmt::format("vertex {} has color {} outside [0, {})", v, col.colors[v], col.c));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
            if (a(k, l) != 0.0 && col.colors[k] == col.colors[l])
                throw DomainError(fmt::format("improper coloring: edge ({}, {}) joins two vertices of color {}", k, l,
                                              col.colors[k]));
}

ComplexMatrix diagonal_unitary(const Coloring& col, std::uint64_t s) {
    std::vector<Complex> d(col.colors.size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = root_of_unity(s * col.colors[k], col.c);
    return ComplexMatrix::diagonal(d);
}

}  // namespace

std::vector<ComplexMatrix> coloring_unitaries(const Coloring& col) {
    if (col.c == 0) throw DomainError("coloring has no colors");
    std::vector<ComplexMatrix> out;
    out.reserve(col.c);
    for (std::uint64_t s = 1; s <= col.c; ++s) out.push_back(diagonal_unitary(col, s));
    return out;
}

double conversion_residual(const SymmetricMatrix& adjacency, const Coloring& col) {
    const ComplexMatrix a(adjacency);
    ComplexMatrix sum(a.size());
    for (const auto& u : coloring_unitaries(col)) sum += conjugate(u, a);
    return sum.frobenius_norm();
}

ColoringCertificate build_conversion(const SymmetricMatrix& adjacency, const Coloring& col) {
    require_coloring_of(adjacency, col);
    ColoringCertificate cert;
    cert.coloring = col;
    cert.unitaries = coloring_unitaries(col);
    const ComplexMatrix a(adjacency);
    ComplexMatrix sum(a.size());
    for (const auto& u : cert.unitaries) sum += conjugate(u, a);
    cert.residual = sum.frobenius_norm();
    cert.tolerance = SPECTRUM_TOL * col.c * adjacency.frobenius_norm();
    return cert;
}

nlohmann::json to_json(const ColoringCertificate& cert) {
    const auto& col = cert.coloring;
    nlohmann::json unitaries = nlohmann::json::array();
    for (std::uint64_t s = 1; s <= col.c; ++s) {
        nlohmann::json row = nlohmann::json::array();
        for (auto color : col.colors) row.push_back(fmt::format("{}/{}", (s * color) % col.c, col.c));
        unitaries.push_back(std::move(row));
    }
    return {{"c", col.c}, {"coloring", col.colors}, {"phases", std::move(unitaries)}, {"residual", cert.residual}};
}

bool recheck_certificate(const nlohmann::json& cert, const Graph& g) {
    try {
        Coloring col;
        col.c = cert.at("c").get<std::uint32_t>();
        col.colors = cert.at("coloring").get<std::vector<std::uint32_t>>();
        if (col.c < 2 || !is_proper(g, col)) return false;
        const auto& phases = cert.at("phases");
        if (phases.size() != col.c) return false;
        for (std::uint64_t s = 1; s <= col.c; ++s) {
            const auto& row = phases.at(s - 1);
            if (row.size() != g.order()) return false;
            for (std::size_t k = 0; k < g.order(); ++k) {
                const auto text = row.at(k).get<std::string>();
                const auto slash = text.find('/');
                if (slash == std::string::npos) return false;
                const auto num = std::stoull(text.substr(0, slash));
                const auto den = std::stoull(text.substr(slash + 1));
                if (den != col.c || num != (s * col.colors[k]) % col.c) return false;
            }
        }
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

// --- majorization step ------------------------------------------------------

MajorizationStepReport verify_majorization_step(const SymmetricMatrix& adjacency,
                                                const std::vector<double>& b_diagonal, const Coloring& col) {
    require_coloring_of(adjacency, col);
    const std::size_t n = adjacency.size();
    if (b_diagonal.size() != n) throw DomainError("verify_majorization_step: B has the wrong dimension");
    const double c = col.c;
    const SymmetricMatrix b = SymmetricMatrix::diagonal(b_diagonal);
    const SymmetricMatrix b_minus_a = b - adjacency;

    const auto unitaries = coloring_unitaries(col);
    const ComplexMatrix x(b_minus_a);
    ComplexMatrix lhs(n);
    for (std::size_t s = 0; s + 1 < unitaries.size(); ++s) lhs += conjugate(unitaries[s], x);
    const ComplexMatrix expected((c - 1.0) * b + adjacency);

    MajorizationStepReport r;
    r.identity_residual = distance(lhs, expected);
    r.identity_tolerance = SPECTRUM_TOL * b_minus_a.frobenius_norm() * c;
    r.identity_ok = r.identity_residual <= r.identity_tolerance;

    const KyFanSums left(eigenvalues_sym(b_minus_a));
    const KyFanSums right(eigenvalues_sym(b + (1.0 / (c - 1.0)) * adjacency));
    r.lhs = left.prefix;
    r.rhs = right.prefix;
    r.spectral_ok = true;
    for (std::size_t i = 0; i < n; ++i) r.spectral_ok = r.spectral_ok && r.lhs[i] >= r.rhs[i] - PROPERTY_TOL;
    return r;
}

// --- LOAN identity ----------------------------------------------------------

LoanIdentityReport verify_loan_identity(const Graph& g, const Coloring& col) {
    if (g.edge_count() == 0) throw DomainError("verify_loan_identity: graph has no edges");
    const SymmetricMatrix a = build_matrix(g, GraphMatrixKind::Adjacency);
    require_coloring_of(a, col);
    const std::size_t n = g.order();
    const double c = col.c;
    const SymmetricMatrix q = build_matrix(g, GraphMatrixKind::SignlessLaplacian);
    const ComplexMatrix qc(q);
    const auto degrees = g.degrees();

    LoanIdentityReport r;
    const auto unitaries = coloring_unitaries(col);
    ComplexMatrix conjugated_sum(n);
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    r.smallest_signless = eigenvalues_sym(q).smallest();
    for (std::size_t s = 0; s + 1 < unitaries.size(); ++s) {
        const ComplexMatrix u_dag = unitaries[s].adjoint();
        conjugated_sum += conjugate(u_dag, qc);  // U_s Q U_s^dagger
        // w = U_s^dagger v
        std::vector<Complex> w(n);
        for (std::size_t k = 0; k < n; ++k) w[k] = u_dag(k, k) * inv_sqrt_n;
        Complex form{};
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) form += std::conj(w[k]) * q(k, l) * w[l];
        r.conjugated_forms.push_back(form.real());
    }
    ComplexMatrix rebuilt(SymmetricMatrix::diagonal(degrees));
    rebuilt *= Complex(c - 1.0);
    rebuilt -= conjugated_sum;
    r.identity_residual = distance(ComplexMatrix(a), rebuilt);
    r.identity_tolerance = SPECTRUM_TOL * c * std::max(1.0, q.frobenius_norm());
    r.identity_ok = r.identity_residual <= r.identity_tolerance;

    double total = 0.0;
    for (double x : a.data()) total += x;
    r.quadratic_form = total / static_cast<double>(n);
    r.average_degree = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n);
    r.quadratic_ok = std::abs(r.quadratic_form - r.average_degree) <= SPECTRUM_TOL * std::max(1.0, r.average_degree);

    r.forms_ok = true;
    for (double f : r.conjugated_forms) r.forms_ok = r.forms_ok && f >= r.smallest_signless - PROPERTY_TOL;
    r.inequality_ok = r.average_degree <= (c - 1.0) * (r.average_degree - r.smallest_signless) + PROPERTY_TOL;
    return r;
}

// --- orthogonal representations ---------------------------------------------

OrthoRepresentation representation_from_coloring(const Coloring& col) {
    OrthoRepresentation rep;
    for (auto color : col.colors) {
        std::vector<Complex> psi(col.c);
        for (std::uint64_t s = 1; s <= col.c; ++s) psi[s - 1] = root_of_unity(s * color, col.c);
        rep.vectors.push_back(std::move(psi));
    }
    return rep;
}

OrthoCheck check_ortho_representation(const SymmetricMatrix& adjacency, const OrthoRepresentation& rep) {
    const std::size_t n = adjacency.size();
    if (rep.vectors.size() != n)
        throw DomainError(fmt::format("representation has {} vectors for {} vertices", rep.vectors.size(), n));
    const std::size_t d = n == 0 ? 0 : rep.vectors.front().size();
    if (d == 0) throw DomainError("representation dimension must be positive");
    for (std::size_t k = 0; k < n; ++k) {
        if (rep.vectors[k].size() != d) throw DomainError(fmt::format("vector {} has the wrong dimension", k));
        for (std::size_t s = 0; s < d; ++s)
            if (std::abs(std::abs(rep.vectors[k][s]) - 1.0) > UNITARY_TOL)
                throw DomainError(fmt::format("entry {} of vector {} does not have modulus one", s, k));
    }
    const double dd = static_cast<double>(d);
    const double tol = SPECTRUM_TOL * dd;

    OrthoCheck out;
    // Inner-product route.
    out.inner_products_ok = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
            if (adjacency(k, l) == 0.0) continue;
            Complex ip{};
            for (std::size_t s = 0; s < d; ++s) ip += std::conj(rep.vectors[k][s]) * rep.vectors[l][s];
            out.worst_inner_product = std::max(out.worst_inner_product, std::abs(ip));
            if (std::abs(ip) > tol) out.inner_products_ok = false;
        }

    // Unitary route: U_s = diag(u_{k,s}); with unit-modulus entries
    // sum_s U_s^dagger U_s = d I, the identity after scaling by 1/sqrt(d).
    const ComplexMatrix a(adjacency);
    ComplexMatrix gram(n);
    ComplexMatrix annihilated(n);
    for (std::size_t s = 0; s < d; ++s) {
        std::vector<Complex> diag(n);
        for (std::size_t k = 0; k < n; ++k) diag[k] = rep.vectors[k][s];
        const ComplexMatrix u = ComplexMatrix::diagonal(diag);
        gram += u.adjoint() * u;
        annihilated += conjugate(u.adjoint(), a);  // U_s A U_s^dagger
    }
    gram -= Complex(dd) * ComplexMatrix::identity(n);
    out.identity_defect = gram.frobenius_norm();
    out.unitary_identities_ok = out.identity_defect <= UNITARY_TOL * dd * std::max<double>(1.0, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
            if (std::abs(annihilated(k, l)) > tol * std::abs(adjacency(k, l))) out.unitary_identities_ok = false;
    return out;
}

// --- pinching ---------------------------------------------------------------

void validate(const PinchingInstance& inst) {
    if (inst.projectors.empty()) throw DomainError("pinching: no projectors");
    const std::size_t n = inst.test_matrix.size();
    ComplexMatrix sum(n);
    for (std::size_t a = 0; a < inst.projectors.size(); ++a) {
        const auto& p = inst.projectors[a];
        if (p.size() != n) throw DomainError(fmt::format("projector {} has the wrong dimension", a));
        if (p.hermitian_defect() > PROJECTOR_TOL) throw DomainError(fmt::format("projector {} is not Hermitian", a));
        if (distance(p * p, p) > PROJECTOR_TOL) throw DomainError(fmt::format("projector {} is not idempotent", a));
        sum += p;
    }
    if (distance(sum, ComplexMatrix::identity(n)) > PROJECTOR_TOL)
        throw DomainError("pinching: projectors do not sum to the identity");
}

ComplexMatrix pinch(const PinchingInstance& inst) {
    validate(inst);
    ComplexMatrix out(inst.test_matrix.size());
    for (const auto& p : inst.projectors) out += p * inst.test_matrix * p;
    return out;
}

ComplexMatrix pinch_via_unitaries(const PinchingInstance& inst) {
    validate(inst);
    const std::size_t n = inst.test_matrix.size();
    const std::uint64_t c = inst.projectors.size();
    ComplexMatrix out(n);
    for (std::uint64_t s = 1; s <= c; ++s) {
        ComplexMatrix u(n);
        for (std::uint64_t a = 1; a <= c; ++a) u += root_of_unity(a * s, c) * inst.projectors[a - 1];
        out += u * inst.test_matrix * u.adjoint();
    }
    out *= Complex(1.0 / static_cast<double>(c));
    return out;
}

CorollaryCheck pinching_corollary_check(const PinchingInstance& inst, std::size_t m) {
    const std::size_t c = inst.projectors.size();
    if (c < 2) throw DomainError("pinching corollary needs at least two projectors");
    const ComplexMatrix& x = inst.test_matrix;
    if (x.hermitian_defect() > UNITARY_TOL * std::max(1.0, x.frobenius_norm()))
        throw DomainError("pinching corollary: test matrix is not Hermitian");
    const double cd = static_cast<double>(c);
    ComplexMatrix y = Complex(cd / (cd - 1.0)) * pinch(inst);
    y -= Complex(1.0 / (cd - 1.0)) * x;
    CorollaryCheck out;
    out.lhs = ky_fan(hermitian_eigenvalues(x), m);
    out.rhs = ky_fan(hermitian_eigenvalues(y), m);
    out.holds = out.lhs >= out.rhs - PROPERTY_TOL;
    return out;
}

std::vector<ComplexMatrix> coloring_projectors(const Coloring& col) {
    const std::size_t n = col.colors.size();
    std::vector<ComplexMatrix> out(col.c, ComplexMatrix(n));
    for (std::size_t k = 0; k < n; ++k) {
        if (col.colors[k] >= col.c) throw DomainError(fmt::format("vertex {} has color outside [0, c)", k));
        out[col.colors[k]](k, k) = 1.0;
    }
    return out;
}

std::vector<ComplexMatrix> random_projector_family(std::size_t n, const std::vector<std::size_t>& block_sizes,
                                                   std::uint64_t seed) {
    std::size_t total = 0;
    for (auto b : block_sizes) {
        if (b == 0) throw DomainError("random_projector_family: empty block");
        total += b;
    }
    if (total != n) throw DomainError("random_projector_family: block sizes must sum to n");

    // Columns of a random complex matrix, orthonormalized by modified Gram-Schmidt.
    std::uint64_t counter = 0;
    auto draw = [&] { return 2.0 * unit_interval(splitmix64(seed, counter++)) - 1.0; };
    std::vector<std::vector<Complex>> basis;
    while (basis.size() < n) {
        std::vector<Complex> v(n);
        for (auto& z : v) z = Complex(draw(), draw());
        for (const auto& q : basis) {
            Complex proj{};
            for (std::size_t i = 0; i < n; ++i) proj += std::conj(q[i]) * v[i];
            for (std::size_t i = 0; i < n; ++i) v[i] -= proj * q[i];
        }
        double norm = 0.0;
        for (const auto& z : v) norm += std::norm(z);
        norm = std::sqrt(norm);
        if (norm < 1e-6) continue;  // nearly dependent draw; take another
        for (auto& z : v) z /= norm;
        basis.push_back(std::move(v));
    }

    std::vector<ComplexMatrix> out;
    std::size_t next = 0;
    for (auto b : block_sizes) {
        ComplexMatrix p(n);
        for (std::size_t j = next; j < next + b; ++j)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s) p(r, s) += basis[j][r] * std::conj(basis[j][s]);
        next += b;
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace spectral_chroma
