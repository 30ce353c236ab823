#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <mutex>
#include <span>

#include <fftw3.h>

namespace bups::fft {

namespace detail {

// FFTW plans are cached per (size, direction). Plan creation is not
// thread-safe; execution via fftw_execute_dft on caller arrays is.
// Plans are created with FFTW_UNALIGNED so they work on any buffer.
inline fftw_plan plan_for(std::size_t n, int sign) {
    static std::mutex mtx;
    static std::map<std::pair<std::size_t, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::complex<double>> tmp(n);
    auto* p = reinterpret_cast<fftw_complex*>(tmp.data());
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), p, p, sign,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, plan);
    return plan;
}

} // namespace detail

/// In-place forward DFT: X_k = sum_j x_j exp(-2*pi*i*j*k/N). Unnormalized.
inline void forward(std::span<std::complex<double>> a) {
    auto* p = reinterpret_cast<fftw_complex*>(a.data());
    fftw_execute_dft(detail::plan_for(a.size(), FFTW_FORWARD), p, p);
}

/// In-place inverse DFT, normalized by 1/N so backward(forward(x)) == x.
inline void backward(std::span<std::complex<double>> a) {
    auto* p = reinterpret_cast<fftw_complex*>(a.data());
    fftw_execute_dft(detail::plan_for(a.size(), FFTW_BACKWARD), p, p);
    const double inv = 1.0 / static_cast<double>(a.size());
    for (auto& v : a) v *= inv;
}

} // namespace bups::fft
