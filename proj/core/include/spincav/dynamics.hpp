#pragma once

#include <complex>
#include <memory>
#include <mutex>
#include <vector>

#include <Eigen/Dense>

#include "spincav/arrowhead.hpp"
#include "spincav/spectral.hpp"
#include "spincav/states.hpp"

namespace spincav {

enum class PropagationMode { Free, Full };

// Single-excitation Hamiltonian for one realization: cavity at omega_c
// coupled with strength Omega * alpha_j to spin j at omega_j.  Basis
// ordering everywhere: index 0 = cavity, 1..N = spins.
//
// The eigendecomposition is computed lazily on first use and cached: the
// coupling phases are gauged away (d_j = alpha_j / |alpha_j|), leaving a
// real arrowhead problem, and propagation applies
// e^{-iHt} = D V e^{-i lam t} V^T D^dagger in O(N^2).
class SingleExcitationHamiltonian {
public:
    explicit SingleExcitationHamiltonian(EnsembleRealization ens);

    const EnsembleRealization& ensemble() const { return ens_; }
    int dim() const { return ens_.size() + 1; }

    // H |psi>, built directly from the arrow structure in O(N).
    Eigen::VectorXcd apply(const Eigen::VectorXcd& psi) const;

    // e^{-iH(t-t0)} |psi0|>.  Free mode drops the coupling (diagonal phases).
    Eigen::VectorXcd propagate(const Eigen::VectorXcd& psi0, double t0, double t,
                               PropagationMode mode = PropagationMode::Full) const;

    const ArrowheadEigen& decomposition() const;
    const Eigen::VectorXcd& gauge() const; // diag phases, entry 0 = 1

private:
    EnsembleRealization ens_;
    mutable std::unique_ptr<ArrowheadEigen> eig_;
    mutable Eigen::VectorXcd gauge_;
    mutable std::once_flag eig_once_;
};

// <tau | psi>: overlap with the bare-time state, cavity entry excluded.
std::complex<double> project_bare(const EnsembleRealization& ens,
                                  const Eigen::VectorXcd& psi, double tau);

struct Trajectory {
    std::vector<double> times;
    std::vector<double> taus;            // bare-time grid of the projections
    Eigen::MatrixXcd chi;                // chi(i_tau, i_time) = <tau|psi(t)>
    std::vector<Eigen::VectorXcd> states; // optional; empty unless kept
};

// Evolve |psi0> from t0 through `times` (ascending) and project on the
// bare-time grid at every step.  keep_states stores the full state vectors
// (memory: (N+1) x |times| complex doubles).
Trajectory evolve_trajectory(const SingleExcitationHamiltonian& H,
                             const Eigen::VectorXcd& psi0, double t0,
                             const std::vector<double>& times,
                             const std::vector<double>& taus,
                             PropagationMode mode = PropagationMode::Full,
                             bool keep_states = false);

// Uniform bare-time grid [lo, hi] with `per_T` points per unit of T,
// offset half a step so tau never lands exactly on 0 or on the kernel's
// discontinuity images.
std::vector<double> default_tau_grid(const SpectralDensity& d, double lo_over_T,
                                     double hi_over_T, int per_T = 64);

} // namespace spincav
