#pragma once

#include <complex>

namespace aqg::fft {

// Unnormalized 2D c2c transforms over row-major data (n1 slow, n2 fast),
// backed by cached FFTW plans. Plans are created with
// FFTW_ESTIMATE | FFTW_UNALIGNED: planning never touches user data, results do
// not depend on measurement noise, and execution is valid for any buffer.
void forward(int n1, int n2, const std::complex<double>* in, std::complex<double>* out);
void inverse(int n1, int n2, const std::complex<double>* in, std::complex<double>* out);

}  // namespace aqg::fft
