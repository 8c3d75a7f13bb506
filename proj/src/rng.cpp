#include "jsi/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace jsi {

double RngStream::uniform_phase() {
    const double pi = 3.14159265358979323846;
    double u;
    do {
        u = uniform01();
    } while (u == 0.0);
    return (2.0 * u - 1.0) * pi;
}

namespace {

// Inversion by sequential search; adequate and exact for small means.
long long poisson_inversion(double mean, RngStream& rng) {
    const double u = rng.uniform01();
    double p = std::exp(-mean);
    double cdf = p;
    long long k = 0;
    while (u > cdf) {
        ++k;
        p *= mean / static_cast<double>(k);
        cdf += p;
        if (k > 2000) break;  // unreachable for mean < 10; numeric guard
    }
    return k;
}

// Hormann's PTRS transformed-rejection sampler, valid for mean >= 10.
long long poisson_ptrs(double mean, RngStream& rng) {
    const double slam = std::sqrt(mean);
    const double loglam = std::log(mean);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double invalpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);

    for (;;) {
        const double u = rng.uniform01() - 0.5;
        const double v = rng.uniform01();
        const double us = 0.5 - std::abs(u);
        if (us <= 0.0) continue;
        const long long k = static_cast<long long>(std::floor((2.0 * a / us + b) * u + mean + 0.43));
        if (us >= 0.07 && v <= vr) return k;
        if (k < 0 || (us < 0.013 && v > us)) continue;
        if (std::log(v) + std::log(invalpha) - std::log(a / (us * us) + b) <=
            static_cast<double>(k) * loglam - mean - std::lgamma(static_cast<double>(k) + 1.0))
            return k;
    }
}

}  // namespace

long long sample_poisson(double mean, RngStream& rng) {
    if (!(mean >= 0.0) || !std::isfinite(mean))
        throw std::invalid_argument("sample_poisson: mean must be finite and non-negative");
    if (mean == 0.0) return 0;
    return mean < 10.0 ? poisson_inversion(mean, rng) : poisson_ptrs(mean, rng);
}

}  // namespace jsi
