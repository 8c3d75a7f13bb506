#pragma once

#include <string>
#include <vector>

#include "jsi/array2.hpp"
#include "jsi/field.hpp"
#include "jsi/franson.hpp"
#include "jsi/schedule.hpp"

namespace jsi {

/// Fourier-domain window that isolates the interferometric sideband.
struct SidebandFilter {
    double radius = 4.0;   // Fourier pixels
    int order = 4;         // super-Gaussian order: exp(-(d/radius)^(2*order))
    double dc_radius = 4.0;  // assumed half-width of the DC term

    friend bool operator==(const SidebandFilter&, const SidebandFilter&) = default;
};

/// Geometry report for the carrier/filter combination.
struct CarrierReport {
    bool pass = false;
    double sideband_cycles = 0.0;      // per-axis sideband position |tau|
    double dc_separation = 0.0;        // diagonal distance sideband <-> DC, index units
    double required_separation = 0.0;  // dc_radius + radius
    double nyquist_cycles = 0.0;       // n / 2
    double sideband_gap = 0.0;         // diagonal distance between the two sidebands
    std::string summary() const;
};

/// Checks that the sideband at (tau, tau) in conjugate coordinates clears the
/// DC term by at least dc_radius + radius, sits inside Nyquist, and does not
/// collide with its own conjugate image.
CarrierReport carrier_frequency_check(const ShearSchedule& schedule, const SidebandFilter& filter,
                                      const FrequencyGrid& grid);

/// Recover the complex interferometric product T1 * conj(T2) from one
/// intensity map: 2-D DFT, window the sideband that carries exp(-i*carrier),
/// inverse DFT, and (optionally) strip the residual carrier so the result is
/// directly comparable with direct_ac. Throws on a failing carrier check.
ComplexMap extract_ac(const RealMap& intensity, const ShearSchedule& schedule,
                      const SidebandFilter& filter, const FrequencyGrid& grid, bool remove_carrier);

/// Ideal noise-free AC map, T1(a,b) * conj(T2(a,b)) with the carrier removed;
/// the oracle and fast path for reconstruction tests.
ComplexMap direct_ac(const ComplexField& e1, const ComplexField& e2, int k, int l,
                     const ShearSchedule& schedule);

/// One complex AC map per shear pair.
struct ACSet {
    FrequencyGrid grid;
    ShearSchedule schedule;
    std::vector<ComplexMap> ac;  // indexed by schedule.pair_index(k, l)
    bool carrier_removed = true;
    int boundary_margin = 0;  // pixels near the edge with known spectral leakage

    const ComplexMap& at(int k, int l) const { return ac[schedule.pair_index(k, l)]; }
};

/// Pixels within this many px of the edge of a Fourier-filtered map are
/// treated as low-confidence.
constexpr int kLeakageMargin = 4;

/// Sideband-extract every count map of an interferogram set.
ACSet extract_ac_set(const InterferogramSet& interferograms, const SidebandFilter& filter,
                     bool remove_carrier = true);

/// Exact AC maps for every shear pair (carrier-free, margin 0).
ACSet direct_ac_set(const ComplexField& e1, const ComplexField& e2, const ShearSchedule& schedule);

}  // namespace jsi
