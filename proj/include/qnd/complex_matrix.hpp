#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qnd/error.hpp"

namespace qnd {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. The substrate for density
/// matrices, observables, Kraus operators and Hamiltonians.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    explicit ComplexMatrix(int dim)
        : dim_(dim), data_(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0}) {
        if (dim < 1) throw Error(ErrorKind::DimensionMismatch, "matrix dimension must be >= 1");
    }

    static ComplexMatrix identity(int dim);
    static ComplexMatrix diagonal(const std::vector<Complex>& entries);
    static ComplexMatrix diagonal_real(const std::vector<double>& entries);
    /// |k><k| on an N-dimensional space.
    static ComplexMatrix basis_projector(int dim, int k);
    static ComplexMatrix from_entries(int dim, std::vector<Complex> entries);

    int dim() const noexcept { return dim_; }
    bool empty() const noexcept { return dim_ == 0; }

    Complex& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * dim_ + c]; }
    const Complex& operator()(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * dim_ + c];
    }

    std::span<const Complex> entries() const noexcept { return data_; }
    std::span<Complex> entries() noexcept { return data_; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
    friend ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double max_abs() const;
    double frobenius_norm() const;
    /// Max entrywise |M - M^dagger|.
    double hermiticity_defect() const;
    bool all_finite() const;

private:
    int dim_ = 0;
    std::vector<Complex> data_;
};

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what);

} // namespace qnd
