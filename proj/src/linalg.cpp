#include "qnd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qnd {

ProbabilityVector ProbabilityVector::create(std::vector<double> probs) {
    constexpr double entry_eps = 1e-12;
    double sum = 0.0;
    for (auto& p : probs) {
        if (!std::isfinite(p) || p < -entry_eps || p > 1.0 + entry_eps)
            throw Error(ErrorKind::InvalidState, "probability entry outside [0,1]");
        p = std::clamp(p, 0.0, 1.0);
        sum += p;
    }
    if (probs.empty() || std::abs(sum - 1.0) > 1e-9)
        throw Error(ErrorKind::InvalidState, "probabilities do not sum to 1");
    return ProbabilityVector(std::move(probs));
}

ProbabilityVector ProbabilityVector::normalized(std::vector<double> values, double slack) {
    double sum = std::accumulate(values.begin(), values.end(), 0.0);
    if (values.empty() || !std::isfinite(sum) || std::abs(sum - 1.0) > slack)
        throw Error(ErrorKind::InvalidState, "distribution mass deviates from 1 beyond slack");
    for (auto& v : values) v /= sum;
    return create(std::move(values));
}

namespace {

// One cyclic Jacobi sweep; returns the largest off-diagonal magnitude seen.
double jacobi_sweep(ComplexMatrix& a, ComplexMatrix& v, double threshold) {
    const int n = a.dim();
    double max_off = 0.0;
    for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const Complex apq = a(p, q);
            const double r = std::abs(apq);
            max_off = std::max(max_off, r);
            if (r <= threshold) continue;

            const double alpha = a(p, p).real();
            const double beta = a(q, q).real();
            const double tau = (beta - alpha) / (2.0 * r);
            const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;
            const Complex phase = apq / r; // e^{i phi}
            const Complex sigma = s * phase;
            const Complex sigma_conj = std::conj(sigma);

            // Rotate rows/columns p and q of the Hermitian matrix.
            for (int i = 0; i < n; ++i) {
                if (i == p || i == q) continue;
                const Complex aip = a(i, p);
                const Complex aiq = a(i, q);
                a(i, p) = c * aip - sigma_conj * aiq;
                a(i, q) = sigma * aip + c * aiq;
                a(p, i) = std::conj(a(i, p));
                a(q, i) = std::conj(a(i, q));
            }
            const double app_new = alpha * c * c - 2.0 * r * s * c + beta * s * s;
            const double aqq_new = alpha * s * s + 2.0 * r * s * c + beta * c * c;
            a(p, p) = app_new;
            a(q, q) = aqq_new;
            a(p, q) = 0.0;
            a(q, p) = 0.0;

            for (int i = 0; i < n; ++i) {
                const Complex vip = v(i, p);
                const Complex viq = v(i, q);
                v(i, p) = c * vip - sigma_conj * viq;
                v(i, q) = sigma * vip + c * viq;
            }
        }
    }
    return max_off;
}

} // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& m, const JacobiOptions& opts) {
    if (!m.all_finite())
        throw Error(ErrorKind::InvalidState, "matrix has non-finite entries");
    if (m.hermiticity_defect() > opts.hermiticity_tol)
        throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian within tolerance");

    const int n = m.dim();
    // Work on the Hermitian average so rounding asymmetry cannot bias sweeps.
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(a.max_abs(), 1e-300);
    const double threshold = 1e-15 * scale;

    bool converged = (n == 1);
    for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
        const double max_off = jacobi_sweep(a, v, threshold);
        converged = max_off <= threshold;
    }
    if (!converged)
        throw Error(ErrorKind::NoConvergence, "Jacobi sweeps exhausted before convergence");

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    EigenSystem out;
    out.eigenvalues.resize(static_cast<std::size_t>(n));
    out.eigenvectors = ComplexMatrix(n);
    for (int k = 0; k < n; ++k) {
        out.eigenvalues[static_cast<std::size_t>(k)] = a(order[static_cast<std::size_t>(k)],
                                                         order[static_cast<std::size_t>(k)]).real();
        for (int i = 0; i < n; ++i)
            out.eigenvectors(i, k) = v(i, order[static_cast<std::size_t>(k)]);
    }
    return out;
}

void require_density_matrix(const ComplexMatrix& m, const char* what) {
    if (!m.all_finite())
        throw Error(ErrorKind::InvalidState, std::string(what) + ": non-finite entries");
    if (m.hermiticity_defect() > 1e-10)
        throw Error(ErrorKind::InvalidState, std::string(what) + ": not Hermitian");
    if (std::abs(m.trace() - Complex{1.0, 0.0}) > 1e-9)
        throw Error(ErrorKind::InvalidState, std::string(what) + ": trace differs from 1");
    const auto es = hermitian_eigensystem(m);
    for (double lambda : es.eigenvalues)
        if (lambda < -1e-10)
            throw Error(ErrorKind::InvalidState, std::string(what) + ": negative eigenvalue");
}

double trace_norm_hermitian(const ComplexMatrix& m) {
    const auto es = hermitian_eigensystem(m);
    double sum = 0.0;
    for (double lambda : es.eigenvalues) sum += std::abs(lambda);
    return sum;
}

double quantum_trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
    require_same_dim(rho, sigma, "trace distance");
    require_density_matrix(rho, "trace distance (first argument)");
    require_density_matrix(sigma, "trace distance (second argument)");
    const double d = 0.5 * trace_norm_hermitian(rho - sigma);
    return std::clamp(d, 0.0, 1.0);
}

double classical_trace_distance(const ProbabilityVector& p, const ProbabilityVector& q) {
    if (p.size() != q.size())
        throw Error(ErrorKind::LengthMismatch, "distributions have different lengths");
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) d += std::abs(p[i] - q[i]);
    return std::clamp(0.5 * d, 0.0, 1.0);
}

double spectral_norm(const ComplexMatrix& m) {
    if (!m.all_finite())
        throw Error(ErrorKind::InvalidState, "matrix has non-finite entries");
    const auto es = hermitian_eigensystem(m.adjoint() * m);
    const double top = es.eigenvalues.empty() ? 0.0 : std::max(es.eigenvalues.front(), 0.0);
    return std::sqrt(top);
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int da = a.dim();
    const int db = b.dim();
    ComplexMatrix out(da * db);
    for (int i1 = 0; i1 < da; ++i1)
        for (int j1 = 0; j1 < da; ++j1) {
            const Complex aij = a(i1, j1);
            if (aij == Complex{0.0, 0.0}) continue;
            for (int i2 = 0; i2 < db; ++i2)
                for (int j2 = 0; j2 < db; ++j2)
                    out(i1 * db + i2, j1 * db + j2) = aij * b(i2, j2);
        }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int dim_a, int dim_b, KeepSide keep) {
    if (dim_a < 1 || dim_b < 1 || dim_a * dim_b != m.dim())
        throw Error(ErrorKind::DimensionMismatch, "partial trace: dims do not factor the matrix");
    if (keep == KeepSide::A) {
        ComplexMatrix out(dim_a);
        for (int i = 0; i < dim_a; ++i)
            for (int j = 0; j < dim_a; ++j) {
                Complex s{0.0, 0.0};
                for (int k = 0; k < dim_b; ++k) s += m(i * dim_b + k, j * dim_b + k);
                out(i, j) = s;
            }
        return out;
    }
    ComplexMatrix out(dim_b);
    for (int i = 0; i < dim_b; ++i)
        for (int j = 0; j < dim_b; ++j) {
            Complex s{0.0, 0.0};
            for (int k = 0; k < dim_a; ++k) s += m(k * dim_b + i, k * dim_b + j);
            out(i, j) = s;
        }
    return out;
}

} // namespace qnd
