#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace lamai::rng {

using Stream = std::mt19937_64;

/// SplitMix64 finalizer; used to derive independent stream seeds from a
/// master seed plus counter keys.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Counter-derived stream: the (k1, k2, k3) keys index e.g. (snr point,
/// trial, purpose). Streams for distinct keys are independent for Monte
/// Carlo purposes and reproducible regardless of scheduling order.
inline Stream derive_stream(std::uint64_t master, std::uint64_t k1,
                            std::uint64_t k2 = 0, std::uint64_t k3 = 0) {
    std::uint64_t h = splitmix64(master);
    h = splitmix64(h ^ (k1 * 0xd6e8feb86659fd93ULL));
    h = splitmix64(h ^ (k2 * 0xca01f9dd51b143cdULL));
    h = splitmix64(h ^ (k3 * 0x2545f4914f6cdd1dULL));
    return Stream(h);
}

/// One draw of a circularly-symmetric complex Gaussian CN(0, variance):
/// real and imaginary parts are i.i.d. N(0, variance / 2).
inline std::complex<double> complex_normal(Stream& g, double variance) {
    std::normal_distribution<double> n(0.0, std::sqrt(variance * 0.5));
    const double re = n(g);
    const double im = n(g);
    return {re, im};
}

/// Uniform double in [0, 1).
inline double uniform01(Stream& g) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return u(g);
}

}  // namespace lamai::rng
