#pragma once

#include <complex>

#include <Eigen/Dense>

#include "spincav/grid.hpp"
#include "spincav/spectral.hpp"

namespace spincav {

struct DeltaGamma {
    Eigen::VectorXd delta; // P int rho(w') / (w - w') dw'
    Eigen::VectorXd gamma; // 2 pi rho(w)
};

// Level-shift pair on the grid.  gamma is 2 pi times the density sample; at
// an exact jump of the density (Uniform support edges) the sample takes the
// midpoint of the one-sided limits, which is the value the Fourier
// representation converges to and what the phase formulas require.  delta is
// computed by the Hilbert-transform FFT recipe: transform rho to time,
// multiply by the Heaviside step (half weight at the boundary bins), and
// transform back; the real part is delta, and the imaginary part reproduces
// -gamma/2 (checked in tests).  `pad` multiplies n for the internal
// transform so periodic wrap-around stays below ~1e-6 with the default 64.
// Accuracy degrades to ~1/k^2 at k grid spacings from a density jump;
// consumers near Uniform support edges should stay >= 24 spacings away for
// 1e-4 accuracy (smooth densities are fine from 3 spacings).
DeltaGamma delta_gamma(const SpectralDensity& d, const FrequencyGrid& g, int pad = 64);

// Direct principal-value quadrature of delta_c at one frequency, by
// singularity subtraction: int (rho(w') - rho(w))/(w - w') dw' is regular and
// integrated by graded Gauss-Legendre panels; the subtracted part integrates
// to rho(w) ln|(w - lo)/(hi - w)|.  Good to ~1e-9 away from support
// endpoints; used as the independent cross-check of the FFT route and as the
// pointwise evaluator for the strong-coupling phase.
double delta_c_pv(const SpectralDensity& d, double omega);

struct ResponseSpectrum {
    FrequencyGrid grid;
    SpectralDensity density;
    double Omega = 0.0;
    double omega_c = 0.0;
    Eigen::VectorXd delta;
    Eigen::VectorXd gamma;
    // Unwrapped phase of the inverse cavity susceptibility:
    // 2 arg[(w - w_c - Omega^2 delta) + i Omega^2 gamma / 2], made continuous
    // along the grid and anchored to 0 at the far left edge where the bare
    // and dressed states coincide.  Comparisons against other branch choices
    // must be made modulo 2 pi.
    Eigen::VectorXd phi;
};

ResponseSpectrum make_response(const SpectralDensity& d, const FrequencyGrid& g,
                               double Omega, double omega_c, int pad = 64);

// Cavity susceptibility 1/[(w - w_c - Omega^2 delta) + i Omega^2 gamma / 2]
// and its conjugate branch.  A grid point that is an exact real-axis pole
// (both terms identically zero) throws SingularityError naming the frequency
// rather than returning inf.
Eigen::VectorXcd cavity_greens_plus(const ResponseSpectrum& r);
Eigen::VectorXcd cavity_greens_minus(const ResponseSpectrum& r);

// Strong-coupling phase -2 atan2(gamma/2, delta): the limit of phi for
// Omega -> infinity, independent of Omega and omega_c.  Continuous branch
// with range (-2 pi, 0]: it winds from -2 pi at (and below) the support
// bottom to 0 at the top, so the below-support value equals the anchored
// 0 only modulo 2 pi.  Uses the PV quadrature, not the grid.
// Throws SingularityError when gamma and delta both vanish exactly.
double phase_strong(const SpectralDensity& d, double omega);

// Centered finite difference of phase_strong, for slope cross-checks.
double phase_strong_slope(const SpectralDensity& d, double omega0, double h = 1e-5);

struct PhaseFit {
    double phi0; // intercept at omega = 0 of the fitted line phi0 + w dt
    double dt;   // slope
};

// Unweighted least-squares line through the unwrapped phase over
// [omega0 - halfwidth, omega0 + halfwidth]; windows narrower than 5 grid
// points are widened to 5.  Throws if the window leaves the grid.
PhaseFit phase_slope(const ResponseSpectrum& r, double omega0, double halfwidth);

} // namespace spincav
