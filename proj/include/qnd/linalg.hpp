#pragma once

#include <vector>

#include "qnd/complex_matrix.hpp"

namespace qnd {

/// Outcome probability distribution. Entries are clamped to [0,1] on
/// construction (tolerating up to 1e-12 float drift outside) and must sum
/// to 1 within 1e-9.
class ProbabilityVector {
public:
    static ProbabilityVector create(std::vector<double> probs);
    /// Divides by the total before validating; accepts |sum - 1| <= slack.
    /// Used for distributions derived from discretized (slightly
    /// trace-deficient) Kraus families.
    static ProbabilityVector normalized(std::vector<double> values, double slack);

    std::size_t size() const noexcept { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    const std::vector<double>& probs() const noexcept { return probs_; }

private:
    explicit ProbabilityVector(std::vector<double> probs) : probs_(std::move(probs)) {}
    std::vector<double> probs_;
};

struct EigenSystem {
    std::vector<double> eigenvalues; // descending
    ComplexMatrix eigenvectors;      // columns, unitary
};

struct JacobiOptions {
    double hermiticity_tol = 1e-10;
    int max_sweeps = 100;
};

/// Cyclic Jacobi eigensolver for Hermitian matrices. Eigenvalues sorted
/// descending; V * diag(lambda) * V^dagger reconstructs the input.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m, const JacobiOptions& opts = {});

/// (1/2) Tr|rho - sigma| between density matrices. Both inputs are checked:
/// Hermitian within 1e-10, eigenvalues >= -1e-10, trace 1 within 1e-9.
double quantum_trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma);

/// Trace norm (sum of |eigenvalues|) of a Hermitian matrix. No density
/// matrix gating; internal building block.
double trace_norm_hermitian(const ComplexMatrix& m);

/// (1/2) sum_m |p_m - q_m|.
double classical_trace_distance(const ProbabilityVector& p, const ProbabilityVector& q);

/// Largest singular value, computed via an eigensolve of M^dagger M.
double spectral_norm(const ComplexMatrix& m);

/// Kronecker product; the first factor carries the slow (most significant)
/// index. Throughout the project the qubit is the first factor and the
/// cavity the second: composite index = qubit_index * dim_cavity + fock_index.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

enum class KeepSide { A, B };

ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b, KeepSide keep);

/// Throws InvalidState unless m is Hermitian (1e-10), PSD (eigenvalues
/// >= -1e-10) and unit trace (1e-9).
void require_density_matrix(const ComplexMatrix& m, const char* what);

} // namespace qnd
