#pragma once

namespace jsi {

constexpr double kSpeedOfLightNmPerS = 2.99792458e17;  // nm / s

/// Discrete detected-frequency axes (omega_A along rows, omega_B along
/// columns) with physical calibration. Pixel i corresponds to the wavelength
/// offset (i - n/2) * pixel_pitch from the center wavelength; the matching
/// angular-frequency offset uses |domega/dlambda| = 2 pi c / lambda^2 at the
/// center. Both axes share center and span.
struct FrequencyGrid {
    int n_signal = 0;
    int n_idler = 0;
    double center_nm = 0.0;
    double span_nm = 0.0;

    double pixel_pitch_signal_nm() const { return span_nm / n_signal; }
    double pixel_pitch_idler_nm() const { return span_nm / n_idler; }

    /// rad/s per pixel step.
    double angular_pitch_signal() const {
        const double twopi = 6.283185307179586476925287;
        return twopi * kSpeedOfLightNmPerS * pixel_pitch_signal_nm() / (center_nm * center_nm);
    }
    double angular_pitch_idler() const {
        const double twopi = 6.283185307179586476925287;
        return twopi * kSpeedOfLightNmPerS * pixel_pitch_idler_nm() / (center_nm * center_nm);
    }

    int center_index_signal() const { return n_signal / 2; }
    int center_index_idler() const { return n_idler / 2; }

    double wavelength_offset_signal_nm(int i) const {
        return (i - center_index_signal()) * pixel_pitch_signal_nm();
    }
    double wavelength_offset_idler_nm(int i) const {
        return (i - center_index_idler()) * pixel_pitch_idler_nm();
    }

    /// Angular-frequency offset from grid center, rad/s.
    double omega_offset_signal(int i) const {
        return (i - center_index_signal()) * angular_pitch_signal();
    }
    double omega_offset_idler(int i) const {
        return (i - center_index_idler()) * angular_pitch_idler();
    }

    bool square() const { return n_signal == n_idler; }

    friend bool operator==(const FrequencyGrid&, const FrequencyGrid&) = default;
};

/// Square grid factory. Rejects n < 8 and non-positive physical parameters.
FrequencyGrid make_grid(int n, double center_nm, double span_nm);

}  // namespace jsi
