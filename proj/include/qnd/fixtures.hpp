#pragma once

#include <complex>
#include <cstdint>

#include "qnd/kraus.hpp"

namespace qnd {

/// Projective measurement {|k><k|} on an N-dimensional space.
KrausSet projective(int dim);

/// M_0 = diag(cos t, sin t), M_1 = diag(sin t, cos t); diagonal for every t.
KrausSet cos_sin_pair(double theta);

/// Amplitude-decay style pair M_0 = |0><0| + cos t |1><1|, M_1 = sin t |0><1|.
/// t = 0 makes M_1 vanish and is rejected as degenerate.
KrausSet decay(double theta);

/// M_0 = |0><1|, M_1 = |1><0|: flips the basis states.
KrausSet swap_fixture();

/// Random complete set: Gaussian operators G_m pushed through the inverse
/// square root of sum G^dag G. Labels 0..count-1.
KrausSet random_kraus(int dim, int count, std::uint64_t seed);

/// Same construction restricted to diagonal operators.
KrausSet random_diagonal_kraus(int dim, int count, std::uint64_t seed);

/// Haar-ish random unitary (QR-free: Gram-Schmidt on Gaussian columns).
ComplexMatrix random_unitary(int dim, std::uint64_t seed);

struct HeterodyneGrid {
    std::vector<std::complex<double>> points;
    std::vector<double> weights;
};

/// 41 x 41 uniform grid on Re, Im in [-5, 5] with uniform quadrature
/// weights; completeness residual < 1e-3 for |alpha| <= 2.
HeterodyneGrid default_heterodyne_grid();

HeterodyneGrid uniform_heterodyne_grid(int points_per_axis, double half_width);

/// <alpha|beta> = exp(-(|alpha|^2 + |beta|^2)/2 + conj(alpha) beta).
std::complex<double> coherent_overlap(std::complex<double> alpha, std::complex<double> beta);

struct HeterodyneFamily {
    KrausSet discretized; // one operator per grid point, labels = indices
    KrausSet binned;      // same operators, binary labels along the alpha0-alpha1 axis
};

/// Qubit Kraus family of a heterodyne cavity readout with pointer states
/// alpha0 (qubit 0) and alpha1 (qubit 1), discretized on the grid. Binning
/// relabels outcomes by the sign of the record component along the line
/// joining alpha0 and alpha1 (ties and the degenerate alpha0 = alpha1 case
/// fall back to the real axis / label 0).
HeterodyneFamily heterodyne_kraus_family(std::complex<double> alpha0, std::complex<double> alpha1,
                                         const HeterodyneGrid& grid = default_heterodyne_grid());

} // namespace qnd
