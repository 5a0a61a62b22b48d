#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spectral_chroma/matrix_kind.hpp"

namespace spectral_chroma {

using Complex = std::complex<double>;

/// Dense real symmetric matrix. Writes go through set(), which mirrors, so
/// symmetry holds bit for bit.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
    static SymmetricMatrix identity(std::size_t n);
    static SymmetricMatrix diagonal(std::span<const double> d);

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t k, std::size_t l) const { return data_[k * n_ + l]; }
    void set(std::size_t k, std::size_t l, double value) {
        data_[k * n_ + l] = value;
        data_[l * n_ + k] = value;
    }
    std::span<const double> data() const noexcept { return data_; }

    double trace() const;
    double frobenius_norm() const;

    SymmetricMatrix& operator+=(const SymmetricMatrix& o);
    SymmetricMatrix& operator-=(const SymmetricMatrix& o);
    SymmetricMatrix& operator*=(double s);
    friend SymmetricMatrix operator+(SymmetricMatrix a, const SymmetricMatrix& b) { return a += b; }
    friend SymmetricMatrix operator-(SymmetricMatrix a, const SymmetricMatrix& b) { return a -= b; }
    friend SymmetricMatrix operator*(double s, SymmetricMatrix a) { return a *= s; }
    friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

/// Dense complex square matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n, Complex{}) {}
    explicit ComplexMatrix(const SymmetricMatrix& real);
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> d);

    std::size_t size() const noexcept { return n_; }
    Complex& operator()(std::size_t k, std::size_t l) { return data_[k * n_ + l]; }
    const Complex& operator()(std::size_t k, std::size_t l) const { return data_[k * n_ + l]; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;
    /// max |x_kl - conj(x_lk)|
    double hermitian_defect() const;
    bool is_hermitian() const { return hermitian_defect() == 0.0; }
    bool is_diagonal() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(Complex s);
    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t n_ = 0;
    std::vector<Complex> data_;
};

/// Frobenius norm of a - b.
double distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigenvalues sorted non-increasing. `kind` is empty for matrices that do
/// not come from a graph.
struct Spectrum {
    std::optional<GraphMatrixKind> kind;
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
    double largest() const { return values.front(); }
    double smallest() const { return values.back(); }
    /// 1-based access matching the usual lambda_1 >= ... >= lambda_n notation.
    double at(std::size_t i) const { return values.at(i - 1); }
};

struct EigenDecomposition {
    std::vector<double> values;                // sorted non-increasing
    std::vector<std::vector<double>> vectors;  // vectors[i] pairs with values[i]
};

/// Cyclic Jacobi. Throws DomainError on an empty or non-finite matrix and
/// NumericError if the off-diagonal mass has not fallen below
/// JACOBI_OFF_TOL * max(1, |A|_F) after JACOBI_MAX_SWEEPS sweeps.
Spectrum eigenvalues_sym(const SymmetricMatrix& a,
                         std::optional<GraphMatrixKind> kind = std::nullopt);
EigenDecomposition eigen_decompose(const SymmetricMatrix& a);

/// Eigenvalues of a complex Hermitian matrix via the real symmetric
/// embedding [[Re, -Im], [Im, Re]], whose spectrum is the input's doubled.
Spectrum hermitian_eigenvalues(const ComplexMatrix& x);

/// Sum of the m largest eigenvalues, 1 <= m <= n.
double ky_fan(const Spectrum& spec, std::size_t m);
/// Sum of the m smallest eigenvalues, 1 <= m <= n.
double ky_fan_tail(const Spectrum& spec, std::size_t m);

/// prefix[m-1] = ky_fan(spec, m).
struct KyFanSums {
    std::vector<double> prefix;
    explicit KyFanSums(const Spectrum& spec);
    double operator()(std::size_t m) const { return prefix.at(m - 1); }
};

/// u^dagger x u for a diagonal u with unit-modulus entries (to UNITARY_TOL).
ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& x);

/// Upper-triangle entries i.i.d. uniform on [-1, 1], mirrored.
SymmetricMatrix random_hermitian(std::size_t n, std::uint64_t seed);
/// Complex Hermitian test matrix: real and imaginary parts uniform on [-1, 1].
ComplexMatrix random_complex_hermitian(std::size_t n, std::uint64_t seed);

/// Counter-based SplitMix64: the `index`-th output of the stream seeded by `seed`.
std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t index);
/// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
double unit_interval(std::uint64_t bits);

}  // namespace spectral_chroma
