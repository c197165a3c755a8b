#include "qnd/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace qnd {

namespace {

void require_basis_labels(const KrausSet& k, const char* what) {
    if (!k.has_basis_labels())
        throw Error(ErrorKind::MissingBasisLabel,
                    std::string(what) + ": a label is needed for every basis index");
}

// POVM element pooled over all outcomes carrying the given label.
ComplexMatrix pooled_povm(const KrausSet& k, int label) {
    ComplexMatrix e(k.dim());
    for (int m = 0; m < k.count(); ++m)
        if (k.label(m) == label) {
            const ComplexMatrix& op = k.op(m);
            e += op.adjoint() * op;
        }
    return e;
}

} // namespace

double readout_fidelity(const KrausSet& k) {
    require_basis_labels(k, "readout fidelity");
    const int n = k.dim();
    double sum = 0.0;
    for (int basis = 0; basis < n; ++basis) sum += pooled_povm(k, basis)(basis, basis).real();
    return std::clamp(sum / n, 0.0, 1.0);
}

double projectivity(const KrausSet& k) {
    require_basis_labels(k, "projectivity");
    const int n = k.dim();
    double sum = 0.0;
    for (int basis = 0; basis < n; ++basis) {
        const ComplexMatrix e = pooled_povm(k, basis);
        for (int m : k.operators_with_label(basis)) {
            const ComplexMatrix& op = k.op(m);
            sum += (op.adjoint() * e * op)(basis, basis).real();
        }
    }
    return std::clamp(sum / n, 0.0, 1.0);
}

double ideality(const KrausSet& k) {
    require_basis_labels(k, "ideality");
    const int n = k.dim();
    double sum = 0.0;
    for (int basis = 0; basis < n; ++basis)
        for (int m : k.operators_with_label(basis)) sum += std::norm(k.op(m)(basis, basis));
    return std::clamp(sum / n, 0.0, 1.0);
}

Demolition theoretical_demolition(const KrausSet& k) {
    const int n = k.dim();
    double sum = 0.0;
    for (int basis = 0; basis < n; ++basis) {
        const ComplexMatrix proj = ComplexMatrix::basis_projector(n, basis);
        ComplexMatrix post = apply_channel(k, proj);
        const double mass = post.trace().real();
        if (std::abs(mass - 1.0) > k.probability_slack())
            throw Error(ErrorKind::InvalidState, "channel output trace deviates beyond slack");
        post *= Complex{1.0 / mass, 0.0};
        sum += quantum_trace_distance(proj, post);
    }
    const double d = std::clamp(sum / n, 0.0, 1.0);
    return {d, 1.0 - d};
}

Demolition experimental_demolition(const KrausSet& k) {
    const int n = k.dim();
    double sum = 0.0;
    for (int basis = 0; basis < n; ++basis) {
        const auto stats = two_stage_distributions(k, ComplexMatrix::basis_projector(n, basis));
        sum += classical_trace_distance(stats.first, stats.second);
    }
    const double d = std::clamp(sum / n, 0.0, 1.0);
    return {d, 1.0 - d};
}

double destructiveness_bound(const KrausSet& k) {
    const int n = k.dim();
    if (n > 16)
        throw Error(ErrorKind::DimensionTooLarge, "vertex enumeration capped at dimension 16");
    double best = 0.0;
    // Sign vertices of the unit cube; ||-X|| = ||X|| lets us pin o_0 = +1.
    const std::uint64_t vertex_count = 1ULL << (n - 1);
    std::vector<double> diag(static_cast<std::size_t>(n));
    for (std::uint64_t v = 0; v < vertex_count; ++v) {
        diag[0] = 1.0;
        for (int i = 1; i < n; ++i)
            diag[static_cast<std::size_t>(i)] = (v >> (i - 1)) & 1ULL ? -1.0 : 1.0;
        const ComplexMatrix o = ComplexMatrix::diagonal_real(diag);
        best = std::max(best, spectral_norm(o - apply_adjoint(k, o)));
    }
    return std::clamp(0.5 * best, 0.0, 1.0);
}

MetricReport full_report(const KrausSet& k) {
    MetricReport report;
    report.dim = k.dim();
    report.mode = ReportMode::Exact;
    report.readout_fidelity = readout_fidelity(k);
    report.projectivity = projectivity(k);
    report.ideality = ideality(k);
    const auto dd = theoretical_demolition(k);
    report.demolition_theoretical = dd.demolition;
    report.qnd_fidelity_theoretical = dd.qnd_fidelity;
    const auto de = experimental_demolition(k);
    report.demolition_experimental = de.demolition;
    report.qnd_fidelity_experimental = de.qnd_fidelity;
    report.destructiveness = destructiveness_bound(k);
    report.flags = qnd_predicates(k);
    return report;
}

std::vector<RelationshipCheck> relationship_check(const MetricReport& report) {
    constexpr double tau = 1e-9;
    std::vector<RelationshipCheck> checks;
    const auto near_one = [](std::optional<double> v) { return v && *v >= 1.0 - tau; };

    if (report.projectivity && report.readout_fidelity && report.qnd_fidelity_theoretical) {
        const bool lhs = near_one(report.projectivity);
        const bool rhs = near_one(report.readout_fidelity) && near_one(report.qnd_fidelity_theoretical);
        checks.push_back({"F_Q=1 iff (F=1 and Q_D=1)", lhs == rhs,
                          lhs == rhs ? "biconditional holds" : "biconditional violated"});
    }
    if (report.projectivity && report.readout_fidelity && report.qnd_fidelity_experimental) {
        const bool lhs = near_one(report.projectivity);
        const bool rhs = near_one(report.readout_fidelity) &&
                         near_one(report.qnd_fidelity_experimental);
        checks.push_back({"F_Q=1 iff (F=1 and Q_E=1)", lhs == rhs,
                          lhs == rhs ? "biconditional holds" : "biconditional violated"});
    }
    if (report.demolition_experimental && report.demolition_theoretical) {
        const bool holds = *report.demolition_experimental <= *report.demolition_theoretical + tau;
        checks.push_back({"D_E <= D_D", holds,
                          "D_E=" + std::to_string(*report.demolition_experimental) +
                              " D_D=" + std::to_string(*report.demolition_theoretical)});
    }
    if (report.projectivity && report.readout_fidelity) {
        const bool holds = *report.projectivity <= *report.readout_fidelity + tau;
        checks.push_back({"F_Q <= F", holds,
                          "F_Q=" + std::to_string(*report.projectivity) +
                              " F=" + std::to_string(*report.readout_fidelity)});
    }
    return checks;
}

} // namespace qnd
