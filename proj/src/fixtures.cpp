#include "qnd/fixtures.hpp"

#include <cmath>

#include "qnd/rng.hpp"

namespace qnd {

KrausSet projective(int dim) {
    std::vector<ComplexMatrix> ops;
    ops.reserve(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) ops.push_back(ComplexMatrix::basis_projector(dim, k));
    return KrausSet::create(dim, std::move(ops));
}

KrausSet cos_sin_pair(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return KrausSet::create(2, {ComplexMatrix::diagonal_real({c, s}),
                                ComplexMatrix::diagonal_real({s, c})});
}

KrausSet decay(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    ComplexMatrix m0(2);
    m0(0, 0) = 1.0;
    m0(1, 1) = c;
    ComplexMatrix m1(2);
    m1(0, 1) = s;
    return KrausSet::create(2, {m0, m1});
}

KrausSet swap_fixture() {
    ComplexMatrix m0(2);
    m0(0, 1) = 1.0;
    ComplexMatrix m1(2);
    m1(1, 0) = 1.0;
    return KrausSet::create(2, {m0, m1});
}

namespace {

ComplexMatrix inverse_sqrt_hermitian(const ComplexMatrix& s) {
    const auto es = hermitian_eigensystem(s);
    const int n = s.dim();
    ComplexMatrix out(n);
    for (int k = 0; k < n; ++k) {
        const double lambda = es.eigenvalues[static_cast<std::size_t>(k)];
        if (lambda <= 0.0)
            throw Error(ErrorKind::Degenerate, "operator sum not positive definite");
        const double w = 1.0 / std::sqrt(lambda);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(i, j) += w * es.eigenvectors(i, k) * std::conj(es.eigenvectors(j, k));
    }
    return out;
}

std::vector<ComplexMatrix> enforce_completeness(int dim, std::vector<ComplexMatrix> ops) {
    ComplexMatrix sum(dim);
    for (const auto& g : ops) sum += g.adjoint() * g;
    const ComplexMatrix t = inverse_sqrt_hermitian(sum);
    for (auto& g : ops) g = g * t;
    return ops;
}

} // namespace

KrausSet random_kraus(int dim, int count, std::uint64_t seed) {
    if (dim < 1 || count < 1)
        throw Error(ErrorKind::DimensionMismatch, "random Kraus set needs dim >= 1, count >= 1");
    RandomStream rng(derive_stream_seed(seed, 0x6b72u, static_cast<std::uint64_t>(dim),
                                        static_cast<std::uint64_t>(count)));
    std::vector<ComplexMatrix> ops;
    ops.reserve(static_cast<std::size_t>(count));
    for (int m = 0; m < count; ++m) {
        ComplexMatrix g(dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) g(i, j) = Complex{rng.gaussian(), rng.gaussian()};
        ops.push_back(std::move(g));
    }
    return KrausSet::create(dim, enforce_completeness(dim, std::move(ops)));
}

KrausSet random_diagonal_kraus(int dim, int count, std::uint64_t seed) {
    if (dim < 1 || count < 1)
        throw Error(ErrorKind::DimensionMismatch, "random Kraus set needs dim >= 1, count >= 1");
    RandomStream rng(derive_stream_seed(seed, 0x6472u, static_cast<std::uint64_t>(dim),
                                        static_cast<std::uint64_t>(count)));
    std::vector<ComplexMatrix> ops;
    ops.reserve(static_cast<std::size_t>(count));
    for (int m = 0; m < count; ++m) {
        std::vector<Complex> d(static_cast<std::size_t>(dim));
        for (auto& v : d) v = Complex{rng.gaussian(), rng.gaussian()};
        ops.push_back(ComplexMatrix::diagonal(d));
    }
    return KrausSet::create(dim, enforce_completeness(dim, std::move(ops)));
}

ComplexMatrix random_unitary(int dim, std::uint64_t seed) {
    RandomStream rng(derive_stream_seed(seed, 0x756eu, static_cast<std::uint64_t>(dim)));
    ComplexMatrix u(dim);
    for (int col = 0; col < dim; ++col) {
        std::vector<Complex> v(static_cast<std::size_t>(dim));
        for (auto& x : v) x = Complex{rng.gaussian(), rng.gaussian()};
        // Gram-Schmidt against previous columns.
        for (int prev = 0; prev < col; ++prev) {
            Complex overlap{0.0, 0.0};
            for (int i = 0; i < dim; ++i)
                overlap += std::conj(u(i, prev)) * v[static_cast<std::size_t>(i)];
            for (int i = 0; i < dim; ++i) v[static_cast<std::size_t>(i)] -= overlap * u(i, prev);
        }
        double norm = 0.0;
        for (const auto& x : v) norm += std::norm(x);
        norm = std::sqrt(norm);
        if (norm < 1e-12) throw Error(ErrorKind::Degenerate, "Gram-Schmidt breakdown");
        for (int i = 0; i < dim; ++i) u(i, col) = v[static_cast<std::size_t>(i)] / norm;
    }
    return u;
}

HeterodyneGrid uniform_heterodyne_grid(int points_per_axis, double half_width) {
    if (points_per_axis < 2)
        throw Error(ErrorKind::GridTooCoarse, "heterodyne grid needs at least 2 points per axis");
    HeterodyneGrid grid;
    const double step = 2.0 * half_width / (points_per_axis - 1);
    const double weight = step * step;
    grid.points.reserve(static_cast<std::size_t>(points_per_axis) * points_per_axis);
    grid.weights.reserve(grid.points.capacity());
    for (int ix = 0; ix < points_per_axis; ++ix)
        for (int iy = 0; iy < points_per_axis; ++iy) {
            grid.points.emplace_back(-half_width + ix * step, -half_width + iy * step);
            grid.weights.push_back(weight);
        }
    return grid;
}

HeterodyneGrid default_heterodyne_grid() { return uniform_heterodyne_grid(41, 5.0); }

std::complex<double> coherent_overlap(std::complex<double> alpha, std::complex<double> beta) {
    return std::exp(-0.5 * (std::norm(alpha) + std::norm(beta)) + std::conj(alpha) * beta);
}

HeterodyneFamily heterodyne_kraus_family(std::complex<double> alpha0, std::complex<double> alpha1,
                                         const HeterodyneGrid& grid) {
    if (grid.points.size() != grid.weights.size() || grid.points.empty())
        throw Error(ErrorKind::GridTooCoarse, "heterodyne grid is empty or inconsistent");
    for (double w : grid.weights)
        if (!(w > 0.0)) throw Error(ErrorKind::GridTooCoarse, "grid weights must be positive");

    const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);
    std::vector<ComplexMatrix> ops;
    ops.reserve(grid.points.size());
    for (std::size_t i = 0; i < grid.points.size(); ++i) {
        const double scale = std::sqrt(grid.weights[i]) * inv_sqrt_pi;
        ComplexMatrix m(2);
        m(0, 0) = scale * coherent_overlap(grid.points[i], alpha0);
        m(1, 1) = scale * coherent_overlap(grid.points[i], alpha1);
        ops.push_back(std::move(m));
    }

    const double residual =
        [&] {
            ComplexMatrix sum(2);
            for (const auto& m : ops) sum += m.adjoint() * m;
            return (sum - ComplexMatrix::identity(2)).max_abs();
        }();
    if (residual >= 1e-3)
        throw Error(ErrorKind::GridTooCoarse,
                    "completeness residual " + std::to_string(residual) + " >= 1e-3");

    // Binary binning along the line joining the pointer states. With
    // coincident pointer states there is no information axis; fall back to
    // the real (in-phase) axis.
    const std::complex<double> mid = 0.5 * (alpha0 + alpha1);
    std::complex<double> axis = alpha0 - alpha1;
    if (std::abs(axis) < 1e-12) axis = {1.0, 0.0};
    axis /= std::abs(axis);
    std::vector<int> binned_labels(grid.points.size());
    for (std::size_t i = 0; i < grid.points.size(); ++i) {
        const double score = std::real(std::conj(axis) * (grid.points[i] - mid));
        binned_labels[i] = score >= 0.0 ? 0 : 1; // ties to outcome 0
    }

    HeterodyneFamily family{KrausSet::create(2, ops, {}, 1e-3),
                            KrausSet::create(2, std::move(ops), std::move(binned_labels), 1e-3)};
    return family;
}

} // namespace qnd
