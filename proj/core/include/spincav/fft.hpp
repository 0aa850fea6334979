#pragma once

#include <complex>
#include <vector>

namespace spincav {

// Thin FFTW wrapper.  FFTW plan creation is not thread safe, so both
// functions serialize planning behind a process-wide mutex; execution is
// reentrant.  Forward = DFT with e^{-2 pi i jk/n} (FFTW sign convention),
// inverse includes the 1/n factor.
std::vector<std::complex<double>> fft_forward(const std::vector<std::complex<double>>& in);
std::vector<std::complex<double>> fft_inverse(const std::vector<std::complex<double>>& in);

} // namespace spincav
