#include "spectral_chroma/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include <fmt/format.h>

#include "spectral_chroma/errors.hpp"
#include "spectral_chroma/tolerances.hpp"

namespace spectral_chroma {

// --- SymmetricMatrix --------------------------------------------------------

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
    SymmetricMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> d) {
    SymmetricMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
    return m;
}

double SymmetricMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double SymmetricMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double x : data_) s += x * x;
    return std::sqrt(s);
}

SymmetricMatrix& SymmetricMatrix::operator+=(const SymmetricMatrix& o) {
    if (o.n_ != n_) throw DomainError("matrix dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

SymmetricMatrix& SymmetricMatrix::operator-=(const SymmetricMatrix& o) {
    if (o.n_ != n_) throw DomainError("matrix dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

SymmetricMatrix& SymmetricMatrix::operator*=(double s) {
    for (double& x : data_) x *= s;
    return *this;
}

// --- ComplexMatrix ----------------------------------------------------------

ComplexMatrix::ComplexMatrix(const SymmetricMatrix& real) : ComplexMatrix(real.size()) {
    for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t l = 0; l < n_; ++l) (*this)(k, l) = real(k, l);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> d) {
    ComplexMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(n_);
    for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t l = 0; l < n_; ++l) r(l, k) = std::conj((*this)(k, l));
    return r;
}

Complex ComplexMatrix::trace() const {
    Complex t{};
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::hermitian_defect() const {
    double worst = 0.0;
    for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t l = k; l < n_; ++l)
            worst = std::max(worst, std::abs((*this)(k, l) - std::conj((*this)(l, k))));
    return worst;
}

bool ComplexMatrix::is_diagonal() const {
    for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t l = 0; l < n_; ++l)
            if (k != l && (*this)(k, l) != Complex{}) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (o.n_ != n_) throw DomainError("matrix dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (o.n_ != n_) throw DomainError("matrix dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (Complex& z : data_) z *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw DomainError("matrix dimension mismatch");
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

double distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).frobenius_norm();
}

// --- Jacobi eigensolver -----------------------------------------------------

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) s += 2.0 * a[p * n + q] * a[p * n + q];
    return std::sqrt(s);
}

// Diagonalizes the row-major working copy `a` in place. When `v` is non-null
// it accumulates the rotations, columns being eigenvectors.
void jacobi(std::vector<double>& a, std::size_t n, std::vector<double>* v) {
    double norm = 0.0;
    for (double x : a) {
        if (!std::isfinite(x)) throw DomainError("eigenvalues_sym: matrix has a non-finite entry");
        norm += x * x;
    }
    const double target = JACOBI_OFF_TOL * std::max(1.0, std::sqrt(norm));

    for (int sweep = 0; sweep <= JACOBI_MAX_SWEEPS; ++sweep) {
        if (off_diagonal_norm(a, n) <= target) return;
        if (sweep == JACOBI_MAX_SWEEPS) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                // Rutishauser's rotation: t = tan(phi), the smaller root.
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a[r * n + p];
                    const double arq = a[r * n + q];
                    const double nrp = arp - s * (arq + tau * arp);
                    const double nrq = arq + s * (arp - tau * arq);
                    a[r * n + p] = a[p * n + r] = nrp;
                    a[r * n + q] = a[q * n + r] = nrq;
                }
                if (v != nullptr) {
                    auto& w = *v;
                    for (std::size_t r = 0; r < n; ++r) {
                        const double vrp = w[r * n + p];
                        const double vrq = w[r * n + q];
                        w[r * n + p] = vrp - s * (vrq + tau * vrp);
                        w[r * n + q] = vrq + s * (vrp - tau * vrq);
                    }
                }
            }
        }
    }
    throw NumericError(fmt::format("eigenvalues_sym: Jacobi did not converge within {} sweeps (n = {})",
                                   JACOBI_MAX_SWEEPS, n));
}

std::vector<std::size_t> descending_order(const std::vector<double>& a, std::size_t n) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t i, std::size_t j) { return a[i * n + i] > a[j * n + j]; });
    return idx;
}

}  // namespace

Spectrum eigenvalues_sym(const SymmetricMatrix& a, std::optional<GraphMatrixKind> kind) {
    const std::size_t n = a.size();
    if (n == 0) throw DomainError("eigenvalues_sym: empty matrix");
    std::vector<double> work(a.data().begin(), a.data().end());
    jacobi(work, n, nullptr);
    Spectrum spec{kind, {}};
    spec.values.reserve(n);
    for (std::size_t i : descending_order(work, n)) spec.values.push_back(work[i * n + i]);
    return spec;
}

EigenDecomposition eigen_decompose(const SymmetricMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) throw DomainError("eigen_decompose: empty matrix");
    std::vector<double> work(a.data().begin(), a.data().end());
    std::vector<double> v(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
    jacobi(work, n, &v);
    EigenDecomposition out;
    for (std::size_t i : descending_order(work, n)) {
        out.values.push_back(work[i * n + i]);
        std::vector<double> col(n);
        for (std::size_t r = 0; r < n; ++r) col[r] = v[r * n + i];
        out.vectors.push_back(std::move(col));
    }
    return out;
}

Spectrum hermitian_eigenvalues(const ComplexMatrix& x) {
    const std::size_t n = x.size();
    if (n == 0) throw DomainError("hermitian_eigenvalues: empty matrix");
    if (x.hermitian_defect() > UNITARY_TOL * std::max(1.0, x.frobenius_norm()))
        throw DomainError("hermitian_eigenvalues: matrix is not Hermitian");
    // Average with the adjoint so the embedding is exactly symmetric.
    SymmetricMatrix big(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = k; l < n; ++l) {
            const Complex z = 0.5 * (x(k, l) + std::conj(x(l, k)));
            big.set(k, l, z.real());
            big.set(n + k, n + l, z.real());
            // Lower-left block is Im, upper-right is -Im.
            big.set(n + k, l, z.imag());
            if (k != l) big.set(n + l, k, -z.imag());
        }
    }
    const Spectrum doubled = eigenvalues_sym(big);
    const double scale = std::max(1.0, x.frobenius_norm());
    Spectrum spec{std::nullopt, {}};
    spec.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double hi = doubled.values[2 * i];
        const double lo = doubled.values[2 * i + 1];
        if (hi - lo > EMBEDDING_PAIR_TOL * scale)
            throw NumericError(fmt::format(
                "hermitian_eigenvalues: embedded eigenvalues {} and {} failed to pair", hi, lo));
        spec.values.push_back(hi);
    }
    return spec;
}

// --- Ky Fan sums ------------------------------------------------------------

namespace {
void check_index(const Spectrum& spec, std::size_t m, const char* what) {
    if (m < 1 || m > spec.size())
        throw DomainError(fmt::format("{}: m = {} outside [1, {}]", what, m, spec.size()));
}
}  // namespace

double ky_fan(const Spectrum& spec, std::size_t m) {
    check_index(spec, m, "ky_fan");
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += spec.values[i];
    return s;
}

double ky_fan_tail(const Spectrum& spec, std::size_t m) {
    check_index(spec, m, "ky_fan_tail");
    const std::size_t n = spec.size();
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += spec.values[n - 1 - i];
    return s;
}

KyFanSums::KyFanSums(const Spectrum& spec) {
    prefix.reserve(spec.size());
    double s = 0.0;
    for (double x : spec.values) prefix.push_back(s += x);
}

// --- unitary conjugation ----------------------------------------------------

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& x) {
    const std::size_t n = u.size();
    if (x.size() != n) throw DomainError("conjugate: dimension mismatch");
    if (!u.is_diagonal()) throw DomainError("conjugate: unitary must be diagonal");
    for (std::size_t k = 0; k < n; ++k)
        if (std::abs(std::abs(u(k, k)) - 1.0) > UNITARY_TOL)
            throw DomainError(fmt::format("conjugate: diagonal entry {} has modulus {}", k,
                                          std::abs(u(k, k))));
    ComplexMatrix r(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex left = std::conj(u(k, k));
        for (std::size_t l = 0; l < n; ++l) r(k, l) = left * x(k, l) * u(l, l);
    }
    return r;
}

// --- random fixtures --------------------------------------------------------

std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double unit_interval(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

SymmetricMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
    SymmetricMatrix m(n);
    std::uint64_t counter = 0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k; l < n; ++l)
            m.set(k, l, 2.0 * unit_interval(splitmix64(seed, counter++)) - 1.0);
    return m;
}

ComplexMatrix random_complex_hermitian(std::size_t n, std::uint64_t seed) {
    ComplexMatrix m(n);
    std::uint64_t counter = 0;
    auto draw = [&] { return 2.0 * unit_interval(splitmix64(seed, counter++)) - 1.0; };
    for (std::size_t k = 0; k < n; ++k) {
        m(k, k) = draw();
        for (std::size_t l = k + 1; l < n; ++l) {
            const double re = draw();
            const double im = draw();
            m(k, l) = Complex(re, im);
            m(l, k) = Complex(re, -im);
        }
    }
    return m;
}

}  // namespace spectral_chroma
