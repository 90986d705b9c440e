#pragma once

#include <complex>
#include <vector>

namespace tempest::fft {

// In-place forward DFT: a[j] <- sum_k a[k] exp(-2*pi*i*j*k/n).
// Backed by FFTW with a per-size plan cache; safe to call concurrently.
void forward(std::vector<std::complex<double>>& a);

}  // namespace tempest::fft
