#pragma once

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "spincav/response.hpp"
#include "spincav/spectral.hpp"

namespace spincav {

enum class PacketKind { Delta, GaussianEnvelope, BandLimited, Tabulated };

// Wave packet, represented primarily by its spectrum
// psi_tilde(w) = int e^{i w t} psi(t) dt, since every propagation formula
// consumes the spectrum.
//   Delta            psi_tilde = 1            (psi(t) = delta(t))
//   GaussianEnvelope psi_tilde = exp(-(w-omega0)^2 / (2 bandwidth^2))
//   BandLimited      indicator of [band_lo, band_hi]
//   Tabulated        linear interpolation of an imported table, 0 outside
struct WavePacket {
    PacketKind kind = PacketKind::Delta;
    double omega0 = 0.0;
    double bandwidth = 0.0; // spectral halfwidth (Gaussian)
    double band_lo = 0.0;
    double band_hi = 0.0;
    Eigen::VectorXd tab_omega;  // ascending
    Eigen::VectorXcd tab_psi;

    std::complex<double> spectrum(double w) const;

    // Time envelope psi(u).  Closed form for GaussianEnvelope and
    // BandLimited; Delta has no pointwise value (throws ValidationError);
    // Tabulated is not evaluated pointwise either (use the spectrum).
    std::complex<double> envelope(double u) const;

    // Half-extent of the bare-time support used by the asymptotic-past
    // check: 4/bandwidth for a Gaussian (amplitude e^{-8} at the edge),
    // 0 for Delta.  Delocalized kinds return +infinity, since they are not
    // movable packets and the check does not apply.
    double envelope_halfwidth() const;
};

WavePacket make_delta_packet();
WavePacket make_gaussian_packet(double omega0, double bandwidth);
// Indicator of the density support (the standard regularization of the
// delta packet for bandwidth-dependent comparisons).
WavePacket make_bandlimited_packet(const SpectralDensity& d);
// Two-or-three column CSV: omega, Re psi_tilde [, Im psi_tilde].
WavePacket load_packet_table(const std::string& path);

// Spin coefficients of the bare-time state |tau>: alpha_j e^{-i omega_j tau}.
// Unit norm by construction.
Eigen::VectorXcd bare_time_coeffs(const EnsembleRealization& ens, double tau);

struct PacketState {
    Eigen::VectorXcd state;   // length N+1; index 0 = cavity (zero), j = spin j
    bool past_support_warning = false;
};

// Freely incoming packet at time t0: spin amplitudes
// alpha_j psi_tilde(omega_j) e^{-i omega_j t0}, cavity amplitude 0,
// normalized to a unit vector (the continuum normalization is only
// approximately preserved by discretization, and fidelities are defined
// between unit vectors).  Sets past_support_warning when the packet's
// bare-time support reaches past t_past into the coupling region.
PacketState wavepacket_coeffs(const EnsembleRealization& ens, const WavePacket& wp,
                              double t0, double t_past);

struct DressedSpectrum {
    Eigen::VectorXcd phase_factor; // e^{-i phi(w)}, unit modulus
    Eigen::VectorXcd cavity_amp;   // (i/Omega)(e^{-i phi} - 1); 0 for Omega = 0
    double identity_residual = 0;  // max |cavity_amp - Omega G_+ gamma|
};

// Frequency-resolved dressed-state data.  The two cavity-amplitude formulas
// (i/Omega)(e^{-i phi} - 1) and Omega G_+ gamma agree identically through
// 1 - i Omega^2 G_+ gamma = e^{-i phi}; the residual records the numerical
// difference (expected <= 1e-10, enforced by tests rather than by a throw).
DressedSpectrum dressed_spectrum(const ResponseSpectrum& r);

} // namespace spincav
