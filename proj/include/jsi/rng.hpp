#pragma once

#include <cstdint>
#include <random>

namespace jsi {

/// splitmix64 finalizer (Vigna's public-domain mixer). Used to derive
/// independent stream seeds from structured inputs.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Order-sensitive combiner: combine(a, b) != combine(b, a).
inline std::uint64_t seed_combine(std::uint64_t a, std::uint64_t b) {
    return mix64(a * 0x2545F4914F6CDD1Dull ^ mix64(b));
}

/// Deterministic uniform stream. mt19937_64 output is pinned by the C++
/// standard, and the double mapping below is explicit, so sequences are
/// reproducible across platforms and compilers.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform double in (-pi, pi).
    double uniform_phase();

private:
    std::mt19937_64 gen_;
};

/// Poisson-distributed integer with the given mean. The algorithm is pinned
/// for reproducibility: inversion by sequential search below mean 10,
/// Hormann's transformed-rejection (PTRS) at mean >= 10. Rejects negative or
/// non-finite means.
long long sample_poisson(double mean, RngStream& rng);

}  // namespace jsi
