#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spincav/dynamics.hpp"
#include "spincav/response.hpp"
#include "spincav/states.hpp"

namespace spincav {

// Continuum prediction for <tau|Psi(t)>, the quantity project_bare measures
// on the discrete oracle.  Expanding the incoming packet in the dressed
// basis (in-continuum plus any bound polariton states outside the support)
// gives, with kappa_+(w, tau) = int_{-tau}^inf e^{i w u} K(u) du,
//
//   chi(tau, t) = int rho psi~ e^{-i w (t-tau)} (1 + D)(1 - i Om^2 G+ kappa_+(w,tau)) dw
//               + sum_b e^{-i lam_b (t - t0)} e_b^2 Om^2 R_b(-t0) R_b(tau),
//   R_b(tau)    = int rho(w) e^{i w tau} / (lam_b - w) dw.
//
// kappa_+ carries the wavefront (-> 2 pi rho far behind it, -> 0 far ahead),
// and D(w) = i Om^2 conj(G+) (2 pi rho - kappa_+(w, -t0)) together with the
// bound-state sum accounts for preparing the packet abruptly at a finite
// time t0 instead of the asymptotic past: for hard-edged densities the
// leftover polariton amplitude decays only like 1/|t0| and is well above
// per-mille level at t0 = -4T.  Pass prep_time to model that preparation
// exactly (delta packets only; localized packets have the correction below
// their kernel floor, so the asymptotic form is used); omit it for the
// ideal t0 -> -infinity in-state.
//
// Evaluated by Gauss-Legendre panels over the density support, graded
// geometrically at the edges; delta_c from the principal-value quadrature,
// not the grid.  The result is normalized like the oracle's unit initial
// vector (division by sqrt(int rho |psi~|^2)).
Eigen::VectorXcd analytic_bare_projection(const SpectralDensity& d, double Omega,
                                          double omega_c, const WavePacket& wp,
                                          const std::vector<double>& taus, double t,
                                          std::optional<double> prep_time = std::nullopt);

// Dressed levels outside the density support (bound polariton pair in
// strong coupling): roots of lam - omega_c - Om^2 delta_c(lam) = 0 below
// and above the support.  Returns 0, 1, or 2 values (ascending).
std::vector<double> bound_state_levels(const SpectralDensity& d, double Omega,
                                       double omega_c);

// Same continuum object without the wavefront correction: every component
// scattered, i.e. kappa_+ replaced by 2 pi rho.  This is the asymptotic
// profile chi(tau - t) that the sheared form linearizes.
Eigen::VectorXcd chi_exact(const ResponseSpectrum& r, const WavePacket& wp,
                           const std::vector<double>& taus, double t);

// Linearized (sheared) profile: phi(w) replaced by phi0 - w dt around the
// carrier, so the packet is rigidly delayed by dt and rotated by phi0.
Eigen::VectorXcd chi_sheared(const ResponseSpectrum& r, const WavePacket& wp,
                             const std::vector<double>& taus, double t,
                             double phi0, double dt);

struct ShearResult {
    double F = 0.0;        // max_{dt} |<ideal(dt)|psi>|
    double dt_star = 0.0;  // argmax, parabolic refinement of the scan
    double phi0 = 0.0;     // -arg of the overlap at dt_star, in [0, 2pi)
    double t_asym = 0.0;
    double window_lo = 0.0, window_hi = 0.0;
    bool boundary_warning = false; // maximum at a scan endpoint
    std::string method;            // "oracle" or "analytic"
    std::vector<double> scan_dt;
    std::vector<double> scan_abs;
};

// Fidelity of the scattered packet against an ideally translated copy of
// itself: evolve to t_asym with the full Hamiltonian, overlap with the
// unit-norm freely-translated packet at t_asym + dt, scan dt over
// [window_lo, window_hi] with the given step constant, refine the peak with
// a parabola through the best three points.  For a delta packet the ideal
// copy degenerates to the unit bare-time vector |t_asym + dt>.
ShearResult shear_fidelity_oracle(const SingleExcitationHamiltonian& H,
                                  const WavePacket& wp, double t0, double t_asym,
                                  double window_lo, double window_hi, double step,
                                  double t_past);

// Continuum counterpart: F(dt) = |int rho |psi_tilde|^2 e^{i(w dt - phi)} dw|
//                              / int rho |psi_tilde|^2 dw,
// the weighted circular mean of the residual phase after linearization.
ShearResult shear_fidelity_analytic(const ResponseSpectrum& r, const WavePacket& wp,
                                    double window_lo, double window_hi, double step);

} // namespace spincav
