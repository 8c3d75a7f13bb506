#pragma once

#include <cstdint>
#include <vector>

#include "jsi/array2.hpp"
#include "jsi/field.hpp"
#include "jsi/schedule.hpp"

namespace jsi {

/// Count-rate model: expected peak coincidences, plus the accidental floor
/// implied by the coincidence efficiency and the pump repetition rate.
struct NoiseModel {
    double peak_counts = 5000.0;       // N_max
    double efficiency = 0.1;           // coincidence efficiency
    double repetition_rate_hz = 80e6;  // pump repetition rate
    bool deterministic = false;        // true: counts = round(scaled P), no draws

    /// (N_max / efficiency)^2 / repetition_rate, the uniform accidental floor.
    double accidental_mean() const {
        const double singles = peak_counts / efficiency;
        return singles * singles / repetition_rate_hz;
    }

    void validate() const;

    friend bool operator==(const NoiseModel&, const NoiseModel&) = default;
};

/// One non-negative integer count map per shear pair (k, l), plus the noise
/// metadata and seed needed to regenerate it bit-exactly.
struct InterferogramSet {
    FrequencyGrid grid;
    ShearSchedule schedule;
    NoiseModel noise;
    std::uint64_t seed = 0;
    std::vector<CountMap> counts;  // indexed by schedule.pair_index(k, l)

    const CountMap& at(int k, int l) const { return counts[schedule.pair_index(k, l)]; }
};

/// Coincidence probability map for shear pair (k, l):
///   P(a, b) = |T1 + T2 * exp(i * carrier)|^2
/// with T1(a, b) = e1(a - omega1[k], b), T2(a, b) = e2(b, a - omega2[l])
/// and carrier(a, b) = (omega_A(a) + omega_B(b)) * tau. The argument swap in
/// T2 reflects the modified-Franson geometry: when both photons take the long
/// path the detectors exchange roles. Out-of-range shifted coordinates
/// contribute zero (non-circular shearing).
RealMap coincidence_probability(const ComplexField& e1, const ComplexField& e2, int k, int l,
                                const ShearSchedule& schedule);

/// Full forward model. All P maps are scaled by one global factor so the
/// brightest pixel of the whole set is expected at noise.peak_counts, then
/// each pixel draws Poisson(scaled P) + Poisson(accidental_mean). With
/// noise.deterministic the draws are replaced by rounding. Each (k, l) map
/// uses an RNG stream derived from (seed, k, l), so synthesis order cannot
/// change the output.
InterferogramSet synthesize_interferograms(const ComplexField& e1, const ComplexField& e2,
                                           const ShearSchedule& schedule, const NoiseModel& noise,
                                           std::uint64_t seed);

}  // namespace jsi
