#pragma once

#include <string>

#include "spincav/dynamics.hpp"
#include "spincav/response.hpp"
#include "spincav/shear.hpp"

namespace spincav {

// Shortest round-trip decimal form (std::to_chars); all data files use it
// so byte-identical reruns come for free.
std::string format_double(double x);

// Write via temp file + rename in the destination directory, so readers
// never observe a half-written file and interrupted runs leave no torn
// outputs.  Creates parent directories as needed.
void write_file_atomic(const std::string& path, const std::string& content);

// Column layouts are part of the tool contract; tests compare these
// byte-for-byte.
std::string response_csv(const ResponseSpectrum& r);                 // omega,gamma_c,delta_c,re_g_plus,im_g_plus,phi
std::string phase_comparison_csv(const ResponseSpectrum& r);         // omega,phi,phi_inf,gap (support interior only)
std::string trajectory_csv(const Trajectory& tr);                    // t,tau,re_chi,im_chi,abs2_chi (long format)
std::string shear_scan_csv(const ShearResult& sr);                   // dt,abs_overlap

} // namespace spincav
