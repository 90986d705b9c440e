#include "tempest/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace tempest::fft {

namespace {

std::mutex g_plan_mutex;
std::unordered_map<std::size_t, fftw_plan>& plan_cache() {
    static auto* cache = new std::unordered_map<std::size_t, fftw_plan>();
    return *cache;
}

fftw_plan plan_for(std::size_t n) {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto& cache = plan_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // UNALIGNED lets the plan execute on any caller buffer of the right size.
    std::vector<std::complex<double>> scratch(n);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_FORWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) throw std::runtime_error("fftw plan creation failed");
    cache.emplace(n, p);
    return p;
}

}  // namespace

void forward(std::vector<std::complex<double>>& a) {
    if (a.empty()) return;
    fftw_plan p = plan_for(a.size());
    auto* buf = reinterpret_cast<fftw_complex*>(a.data());
    fftw_execute_dft(p, buf, buf);
}

}  // namespace tempest::fft
