#include "qnd/complex_matrix.hpp"

#include <cmath>
#include <utility>

namespace qnd {

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& entries) {
    ComplexMatrix m(static_cast<int>(entries.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal_real(const std::vector<double>& entries) {
    ComplexMatrix m(static_cast<int>(entries.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
    return m;
}

ComplexMatrix ComplexMatrix::basis_projector(int dim, int k) {
    if (k < 0 || k >= dim)
        throw Error(ErrorKind::DimensionMismatch, "basis index out of range");
    ComplexMatrix m(dim);
    m(k, k) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_entries(int dim, std::vector<Complex> entries) {
    if (entries.size() != static_cast<std::size_t>(dim) * dim)
        throw Error(ErrorKind::DimensionMismatch, "entry count does not match dimension");
    ComplexMatrix m(dim);
    m.data_ = std::move(entries);
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_dim(*this, other, "matrix addition");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_dim(*this, other, "matrix subtraction");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (auto& v : data_) v *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "matrix product");
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t{0.0, 0.0};
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const auto& v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.dim() != b.dim())
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": dimensions differ");
}

} // namespace qnd
