#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace bups {

/// Uniform periodic 1-D mesh of N points on [-L/2, L/2) with the conjugate
/// wavenumbers in standard FFT ordering, k in [-pi/dx, pi/dx).
struct SpatialGrid {
    double length = 0.0;
    std::size_t count = 0;

    static bool is_power_of_two(std::size_t n) {
        return n != 0 && (n & (n - 1)) == 0;
    }

    SpatialGrid() = default;
    SpatialGrid(double L, std::size_t N) : length(L), count(N) {
        if (!(L > 0.0)) throw std::invalid_argument("grid length must be > 0");
        if (!is_power_of_two(N))
            throw std::invalid_argument("grid count must be a power of two");
    }

    double spacing() const { return length / static_cast<double>(count); }

    double coord(std::size_t j) const {
        return -0.5 * length + static_cast<double>(j) * spacing();
    }

    // FFT ordering: k_j = 2*pi*j/L for j < N/2, 2*pi*(j-N)/L otherwise.
    double wavenumber(std::size_t j) const {
        const double dk = 2.0 * std::numbers::pi / length;
        const auto half = count / 2;
        return j < half ? dk * static_cast<double>(j)
                        : dk * (static_cast<double>(j) - static_cast<double>(count));
    }

    double nyquist() const { return std::numbers::pi / spacing(); }

    std::vector<double> coords() const {
        std::vector<double> x(count);
        for (std::size_t j = 0; j < count; ++j) x[j] = coord(j);
        return x;
    }

    std::vector<double> wavenumbers() const {
        std::vector<double> k(count);
        for (std::size_t j = 0; j < count; ++j) k[j] = wavenumber(j);
        return k;
    }

    bool operator==(const SpatialGrid&) const = default;
};

/// Complex wave-function samples on a grid at a fixed time.
struct WaveField {
    SpatialGrid grid;
    double time = 0.0;
    std::vector<std::complex<double>> psi;

    WaveField() = default;
    WaveField(SpatialGrid g, double t, std::vector<std::complex<double>> a)
        : grid(g), time(t), psi(std::move(a)) {
        if (psi.size() != grid.count)
            throw std::invalid_argument("amplitude count does not match grid");
    }

    std::size_t size() const { return psi.size(); }

    /// Discrete norm sum |psi_j|^2 dx.
    double norm() const {
        double s = 0.0;
        for (const auto& a : psi) s += std::norm(a);
        return s * grid.spacing();
    }

    std::vector<double> density() const {
        std::vector<double> rho(psi.size());
        for (std::size_t j = 0; j < psi.size(); ++j) rho[j] = std::norm(psi[j]);
        return rho;
    }

    void rescale(double factor) {
        for (auto& a : psi) a *= factor;
    }

    /// Normalize the discrete norm to exactly 1.
    void normalize() {
        const double n = norm();
        if (!(n > 0.0)) throw std::domain_error("cannot normalize a zero field");
        rescale(1.0 / std::sqrt(n));
    }
};

/// Max |psi| at the two domain-edge cells relative to the global peak.
/// Values above ~1e-6 indicate periodic wrap-around contamination.
inline double edge_leak_ratio(const WaveField& f) {
    double peak = 0.0;
    for (const auto& a : f.psi) peak = std::max(peak, std::abs(a));
    if (peak == 0.0) return 0.0;
    const double edge = std::max(std::abs(f.psi.front()), std::abs(f.psi.back()));
    return edge / peak;
}

} // namespace bups
