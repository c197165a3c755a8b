#include "qnd/kraus.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qnd {

namespace {

ComplexMatrix povm_sum(int dim, const std::vector<ComplexMatrix>& ops) {
    ComplexMatrix sum(dim);
    for (const auto& m : ops) sum += m.adjoint() * m;
    return sum;
}

} // namespace

ValidationReport validate_kraus(int dim, const std::vector<ComplexMatrix>& operators) {
    ValidationReport report;
    if (dim < 1 || operators.empty()) {
        report.completeness_residual = 1.0;
        return report;
    }
    for (const auto& m : operators)
        if (m.dim() != dim)
            throw Error(ErrorKind::DimensionMismatch, "Kraus operator dimension mismatch");
    report.completeness_residual = (povm_sum(dim, operators) - ComplexMatrix::identity(dim)).max_abs();
    report.operator_norms.reserve(operators.size());
    for (const auto& m : operators) report.operator_norms.push_back(spectral_norm(m));
    report.pass = report.completeness_residual < 1e-9;
    return report;
}

KrausSet KrausSet::create(int dim, std::vector<ComplexMatrix> operators, std::vector<int> labels,
                          double completeness_tol) {
    if (dim < 1) throw Error(ErrorKind::DimensionMismatch, "Kraus set dimension must be >= 1");
    if (operators.empty()) throw Error(ErrorKind::Degenerate, "Kraus set needs at least one operator");
    for (const auto& m : operators) {
        if (m.dim() != dim)
            throw Error(ErrorKind::DimensionMismatch, "Kraus operator dimension mismatch");
        if (!m.all_finite())
            throw Error(ErrorKind::InvalidState, "Kraus operator has non-finite entries");
        if (m.max_abs() == 0.0)
            throw Error(ErrorKind::Degenerate, "zero Kraus operator");
    }
    if (labels.empty()) {
        labels.resize(operators.size());
        for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i);
    }
    if (labels.size() != operators.size())
        throw Error(ErrorKind::LengthMismatch, "label count differs from operator count");

    KrausSet set;
    set.dim_ = dim;
    set.operators_ = std::move(operators);
    set.labels_ = std::move(labels);
    set.completeness_residual_ =
        (povm_sum(dim, set.operators_) - ComplexMatrix::identity(dim)).max_abs();
    if (set.completeness_residual_ > completeness_tol)
        throw Error(ErrorKind::IncompleteKraus, "sum M^dag M deviates from identity beyond tolerance");
    return set;
}

double KrausSet::probability_slack() const noexcept {
    // dim * residual bounds the trace deficit; small floor for rounding.
    return std::max(1e-9, 2.0 * dim_ * completeness_residual_);
}

bool KrausSet::has_basis_labels() const {
    std::set<int> present(labels_.begin(), labels_.end());
    for (int k = 0; k < dim_; ++k)
        if (!present.count(k)) return false;
    return true;
}

std::vector<int> KrausSet::operators_with_label(int label) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) out.push_back(static_cast<int>(i));
    return out;
}

KrausSet KrausSet::relabeled(std::vector<int> labels) const {
    if (labels.size() != operators_.size())
        throw Error(ErrorKind::LengthMismatch, "label count differs from operator count");
    KrausSet set(*this);
    set.labels_ = std::move(labels);
    return set;
}

ComplexMatrix apply_channel(const KrausSet& k, const ComplexMatrix& rho) {
    if (rho.dim() != k.dim())
        throw Error(ErrorKind::DimensionMismatch, "state dimension differs from Kraus set");
    ComplexMatrix out(k.dim());
    for (const auto& m : k.operators()) out += m * rho * m.adjoint();
    return out;
}

ComplexMatrix apply_adjoint(const KrausSet& k, const ComplexMatrix& observable) {
    if (observable.dim() != k.dim())
        throw Error(ErrorKind::DimensionMismatch, "observable dimension differs from Kraus set");
    ComplexMatrix out(k.dim());
    for (const auto& m : k.operators()) out += m.adjoint() * observable * m;
    return out;
}

ProbabilityVector outcome_distribution(const KrausSet& k, const ComplexMatrix& rho) {
    if (rho.dim() != k.dim())
        throw Error(ErrorKind::DimensionMismatch, "state dimension differs from Kraus set");
    std::vector<double> probs;
    probs.reserve(static_cast<std::size_t>(k.count()));
    for (const auto& m : k.operators()) {
        const Complex t = (m * rho * m.adjoint()).trace();
        probs.push_back(t.real());
    }
    return ProbabilityVector::normalized(std::move(probs), k.probability_slack());
}

TwoStageStats two_stage_distributions(const KrausSet& k, const ComplexMatrix& rho) {
    if (rho.dim() != k.dim())
        throw Error(ErrorKind::DimensionMismatch, "state dimension differs from Kraus set");
    const int count = k.count();
    std::vector<ComplexMatrix> povm;
    povm.reserve(static_cast<std::size_t>(count));
    for (const auto& m : k.operators()) povm.push_back(m.adjoint() * m);

    std::vector<double> joint(static_cast<std::size_t>(count) * count, 0.0);
    double total = 0.0;
    for (int n = 0; n < count; ++n) {
        const ComplexMatrix& mn = k.op(n);
        const ComplexMatrix post = mn * rho * mn.adjoint(); // unnormalized
        for (int m = 0; m < count; ++m) {
            const double p = (povm[static_cast<std::size_t>(m)] * post).trace().real();
            joint[static_cast<std::size_t>(n) * count + m] = std::max(p, 0.0);
            total += std::max(p, 0.0);
        }
    }
    // The joint mass of a near-complete family falls short of 1 by up to
    // twice the completeness slack (two applications).
    if (std::abs(total - 1.0) > 2.0 * k.probability_slack() + 1e-12)
        throw Error(ErrorKind::InvalidState, "two-stage joint mass deviates from 1 beyond slack");
    for (auto& p : joint) p /= total;

    std::vector<double> first(static_cast<std::size_t>(count), 0.0);
    std::vector<double> second(static_cast<std::size_t>(count), 0.0);
    for (int n = 0; n < count; ++n)
        for (int m = 0; m < count; ++m) {
            const double p = joint[static_cast<std::size_t>(n) * count + m];
            first[static_cast<std::size_t>(n)] += p;
            second[static_cast<std::size_t>(m)] += p;
        }

    TwoStageStats stats{ProbabilityVector::create(first), ProbabilityVector::create(second),
                        std::move(joint), {}, count};
    stats.conditional.resize(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) {
        const double pn = stats.first[static_cast<std::size_t>(n)];
        if (pn <= 0.0) continue;
        std::vector<double> row(static_cast<std::size_t>(count));
        for (int m = 0; m < count; ++m) row[static_cast<std::size_t>(m)] = stats.joint_at(n, m) / pn;
        stats.conditional[static_cast<std::size_t>(n)] = std::move(row);
    }
    return stats;
}

QndReport qnd_predicates(const KrausSet& k) {
    constexpr double tol = 1e-9;
    const int dim = k.dim();
    QndReport report;

    auto off_diagonal_max = [](const ComplexMatrix& m) {
        double v = 0.0;
        for (int i = 0; i < m.dim(); ++i)
            for (int j = 0; j < m.dim(); ++j)
                if (i != j) v = std::max(v, std::abs(m(i, j)));
        return v;
    };

    report.all_kraus_diagonal = true;
    for (const auto& m : k.operators())
        if (off_diagonal_max(m) > tol) { report.all_kraus_diagonal = false; break; }

    report.adjoint_fixes_basis_projectors = true;
    report.channel_fixes_basis_states = true;
    for (int b = 0; b < dim; ++b) {
        const ComplexMatrix proj = ComplexMatrix::basis_projector(dim, b);
        if ((apply_adjoint(k, proj) - proj).max_abs() > tol)
            report.adjoint_fixes_basis_projectors = false;
        if ((apply_channel(k, proj) - proj).max_abs() > tol)
            report.channel_fixes_basis_states = false;
    }

    std::vector<ComplexMatrix> povm;
    povm.reserve(static_cast<std::size_t>(k.count()));
    for (const auto& m : k.operators()) povm.push_back(m.adjoint() * m);

    report.povm_diagonal = true;
    for (const auto& e : povm)
        if (off_diagonal_max(e) > tol) { report.povm_diagonal = false; break; }

    // Stack the POVM diagonals as rows; independence = full row rank, tested
    // through the Gram matrix' smallest eigenvalue (sigma_min > 1e-8).
    report.povm_linearly_independent = false;
    const int count = k.count();
    if (count <= dim) {
        ComplexMatrix gram(count);
        for (int a = 0; a < count; ++a)
            for (int b = 0; b < count; ++b) {
                double s = 0.0;
                for (int i = 0; i < dim; ++i)
                    s += povm[static_cast<std::size_t>(a)](i, i).real() *
                         povm[static_cast<std::size_t>(b)](i, i).real();
                gram(a, b) = s;
            }
        const auto es = hermitian_eigensystem(gram);
        const double smallest = es.eigenvalues.back();
        report.povm_linearly_independent = smallest > 1e-8 * 1e-8;
    }

    // q equals the outcome distribution of the (trace-normalized)
    // non-selective post-state; avoids the full count^2 joint.
    report.p_equals_q_on_basis = true;
    for (int b = 0; b < dim; ++b) {
        const ComplexMatrix proj = ComplexMatrix::basis_projector(dim, b);
        const ProbabilityVector p = outcome_distribution(k, proj);
        ComplexMatrix post = apply_channel(k, proj);
        post *= Complex{1.0 / post.trace().real(), 0.0};
        const ProbabilityVector q = outcome_distribution(k, post);
        for (std::size_t m = 0; m < p.size(); ++m)
            if (std::abs(p[m] - q[m]) > tol) {
                report.p_equals_q_on_basis = false;
                break;
            }
        if (!report.p_equals_q_on_basis) break;
    }
    return report;
}

} // namespace qnd
