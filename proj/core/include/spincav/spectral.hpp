#pragma once

#include <complex>

#include <Eigen/Dense>

#include "spincav/errors.hpp"

namespace spincav {

enum class DensityModel { Uniform, HalfwaveCosSq, Gaussian };

// Effective spin density rho_eff(omega): the unit-normalized frequency
// profile of the ensemble weighted by coupling strength.  T is the
// characteristic dephasing time of the profile; all frequencies are angular
// and carry units of 1/T, all times units of T.  T is kept explicit so unit
// mistakes show up in tests instead of cancelling silently.
struct SpectralDensity {
    DensityModel model = DensityModel::HalfwaveCosSq;
    double T = 1.0;
    // Gaussian support is cut at +-sigma_trunc * sigma and renormalized;
    // the default keeps the truncation error below 2e-9.
    double sigma_trunc = 6.0;

    // Standard deviation of the Gaussian model, sqrt((pi^2-6)/3)/T.
    // The value is chosen so that the short-time kernel decay matches the
    // other two models.  Meaningless for the compact models.
    double sigma() const;

    double support_lo() const;
    double support_hi() const;
};

SpectralDensity make_density(DensityModel model, double T, double sigma_trunc = 6.0);

// rho_eff(omega).  Zero outside the support; the closed boundary points
// evaluate to the one-sided inside limit.
double eval_density(const SpectralDensity& d, double omega);

// Bare-time overlap <tau2|tau1> = int rho_eff(w) e^{-i w dtau} dw,
// dtau = tau1 - tau2.  Closed forms:
//   Uniform       sinc(pi dtau/T)
//   HalfwaveCosSq sinc(pi x) + [sinc(pi(x-1)) + sinc(pi(x+1))]/2,  x = dtau/T
//   Gaussian      exp(-sigma^2 dtau^2 / 2)   (untruncated form; the
//                 truncation changes the value by < 2e-9)
// Real for these even densities, returned as complex for generality.
std::complex<double> overlap_kernel(const SpectralDensity& d, double dtau);

double density_cdf(const SpectralDensity& d, double omega);

// Inverse CDF.  Closed form for Uniform; bisection to 1e-12 otherwise.
double quantile(const SpectralDensity& d, double p);

// A concrete finite ensemble: input to the exact oracle.
struct EnsembleRealization {
    Eigen::VectorXd omega;   // strictly increasing spin detunings
    Eigen::VectorXcd alpha;  // normalized couplings, sum |alpha_j|^2 = 1
    double Omega = 0.0;      // collective coupling
    double omega_c = 0.0;    // cavity detuning

    int size() const { return static_cast<int>(omega.size()); }
};

// Deterministic CDF-midpoint discretization: omega_j = Q((j-1/2)/N) with
// equal weights alpha_j = 1/sqrt(N).  No randomness, so runs reproduce
// exactly and the empirical kernel converges at the midpoint-rule rate.
EnsembleRealization sample_ensemble(const SpectralDensity& d, int N,
                                    double Omega, double omega_c);

} // namespace spincav
