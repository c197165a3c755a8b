#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qnd/kraus.hpp"

namespace qnd {

enum class ReportMode { Exact, Estimated };

/// Full measurement scorecard. Estimated reports carry only the
/// experimentally accessible entries; the rest stay unset.
struct MetricReport {
    int dim = 0;
    std::optional<double> readout_fidelity;       // F
    std::optional<double> projectivity;           // F_Q
    std::optional<double> ideality;               // F_I
    std::optional<double> demolition_theoretical; // D_D
    std::optional<double> qnd_fidelity_theoretical; // Q_D = 1 - D_D
    std::optional<double> demolition_experimental;  // D_E
    std::optional<double> qnd_fidelity_experimental; // Q_E = 1 - D_E
    std::optional<double> destructiveness;        // D_P
    std::optional<QndReport> flags;
    ReportMode mode = ReportMode::Exact;
};

struct Demolition {
    double demolition = 0.0;
    double qnd_fidelity = 1.0;
};

/// F = (1/N) sum_k <k|E_k|k>, with outcomes sharing a basis label pooled at
/// the POVM (statistics) level.
double readout_fidelity(const KrausSet& k);

/// F_Q = (1/N) sum_k <k|M_k^dag E_k M_k|k>: probability that two
/// consecutive runs both report k on the basis state k.
double projectivity(const KrausSet& k);

/// F_I = (1/N) sum_k |<k|M_k|k>|^2 (summed over the label's operators).
double ideality(const KrausSet& k);

/// D_D = (1/N) sum_k D(|k><k|, E(|k><k|)); the channel output is
/// trace-normalized so discretized near-complete families stay valid inputs.
Demolition theoretical_demolition(const KrausSet& k);

/// D_E = (1/N) sum_k classical distance between first and second outcome
/// distributions of two consecutive measurements.
Demolition experimental_demolition(const KrausSet& k);

/// D_P = (1/2) max over unit-norm diagonal observables of the spectral norm
/// of O - E^dag(O). Convex in the diagonal entries, so the maximum is taken
/// over the 2^(N-1) sign vertices (first entry pinned to +1). N <= 16.
double destructiveness_bound(const KrausSet& k);

MetricReport full_report(const KrausSet& k);

struct RelationshipCheck {
    std::string name;
    bool holds = false;
    std::string detail;
};

/// Evaluates the equality-at-1 biconditionals (tau = 1e-9 neighborhoods)
/// and the order relations D_E <= D_D, F_Q <= F on one report.
std::vector<RelationshipCheck> relationship_check(const MetricReport& report);

} // namespace qnd
