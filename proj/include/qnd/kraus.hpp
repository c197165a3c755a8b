#pragma once

#include <optional>
#include <vector>

#include "qnd/complex_matrix.hpp"
#include "qnd/linalg.hpp"

namespace qnd {

struct ValidationReport {
    double completeness_residual = 0.0;     // max entry of |sum M^dag M - I|
    std::vector<double> operator_norms;     // spectral norm per operator
    bool pass = false;                      // residual < 1e-9
};

ValidationReport validate_kraus(int dim, const std::vector<ComplexMatrix>& operators);

/// Ordered, outcome-labeled Kraus operators defining one measurement.
/// Labels decouple the Kraus index from the basis index so discretized
/// continuous-outcome families can be binned by relabeling outcomes,
/// without ever summing operators.
class KrausSet {
public:
    /// Labels default to 0..count-1. completeness_tol is the accepted
    /// residual of sum M^dag M - I; the strict default covers every family
    /// except discretized ones (the heterodyne grid uses 1e-3).
    static KrausSet create(int dim, std::vector<ComplexMatrix> operators,
                           std::vector<int> labels = {}, double completeness_tol = 1e-9);

    int dim() const noexcept { return dim_; }
    int count() const noexcept { return static_cast<int>(operators_.size()); }
    const ComplexMatrix& op(int m) const { return operators_[static_cast<std::size_t>(m)]; }
    const std::vector<ComplexMatrix>& operators() const noexcept { return operators_; }
    int label(int m) const { return labels_[static_cast<std::size_t>(m)]; }
    const std::vector<int>& labels() const noexcept { return labels_; }

    double completeness_residual() const noexcept { return completeness_residual_; }
    /// Slack for downstream probability normalization: residual plus margin.
    double probability_slack() const noexcept;

    /// True when every basis index 0..dim-1 appears as a label.
    bool has_basis_labels() const;
    std::vector<int> operators_with_label(int label) const;

    /// Same operators, new outcome labels (statistics-level binning).
    KrausSet relabeled(std::vector<int> labels) const;

private:
    KrausSet() = default;
    int dim_ = 0;
    std::vector<ComplexMatrix> operators_;
    std::vector<int> labels_;
    double completeness_residual_ = 0.0;
};

/// Diagonal observable in the computational basis; entries bounded by 1
/// when used as a unit-norm observable.
struct DiagonalObservable {
    int dim = 0;
    std::vector<double> entries;

    ComplexMatrix to_matrix() const { return ComplexMatrix::diagonal_real(entries); }
};

/// First/second-measurement distributions and joint outcome statistics for
/// two consecutive applications of the same measurement.
struct TwoStageStats {
    ProbabilityVector first;
    ProbabilityVector second;
    std::vector<double> joint; // row-major count x count, P(first=n, second=m)
    // conditional[n] = distribution of the second outcome given first = n;
    // absent where the first outcome has zero probability.
    std::vector<std::optional<std::vector<double>>> conditional;
    int outcome_count = 0;

    double joint_at(int n, int m) const {
        return joint[static_cast<std::size_t>(n) * outcome_count + m];
    }
};

/// Non-selective post-state E(rho) = sum_m M_m rho M_m^dagger.
ComplexMatrix apply_channel(const KrausSet& k, const ComplexMatrix& rho);

/// Adjoint channel E^dagger(O) = sum_m M_m^dagger O M_m.
ComplexMatrix apply_adjoint(const KrausSet& k, const ComplexMatrix& observable);

/// p_m = Tr[E_m rho], normalized by the total outcome mass (a no-op for
/// complete sets; compensates the residual of discretized families).
ProbabilityVector outcome_distribution(const KrausSet& k, const ComplexMatrix& rho);

TwoStageStats two_stage_distributions(const KrausSet& k, const ComplexMatrix& rho);

struct QndReport {
    bool all_kraus_diagonal = false;
    bool adjoint_fixes_basis_projectors = false;
    bool channel_fixes_basis_states = false;
    bool povm_diagonal = false;
    bool povm_linearly_independent = false;
    bool p_equals_q_on_basis = false;
};

/// Each flag evaluated at tolerance 1e-9. Linear independence of the POVM
/// diagonals is rank-of-stacked-diagonals, smallest singular value > 1e-8.
QndReport qnd_predicates(const KrausSet& k);

} // namespace qnd
