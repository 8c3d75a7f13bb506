#pragma once

#include <vector>

#include "jsi/grid.hpp"

namespace jsi {

/// The two independent integer-pixel shear lists plus the interferometric
/// delay. tau is dimensionless: carrier cycles accumulated across one grid
/// axis, i.e. the phase advances 2*pi*tau_cycles/n per pixel along each
/// detected axis. The physical delay in seconds is tau_seconds() below.
struct ShearSchedule {
    std::vector<int> omega1;  // signal-arm shears, px
    std::vector<int> omega2;  // idler-arm shears, px
    double tau_cycles = 8.0;

    int pair_count() const { return static_cast<int>(omega1.size() * omega2.size()); }
    int pair_index(int k, int l) const { return k * static_cast<int>(omega2.size()) + l; }

    friend bool operator==(const ShearSchedule&, const ShearSchedule&) = default;
};

/// Eight 1-px-spaced shears from -4 to +3 on both arms (the default), or a
/// custom consecutive range.
ShearSchedule make_schedule_preset_8();
/// Thirty-two 1-px-spaced shears from -16 to +15 on both arms.
ShearSchedule make_schedule_preset_32();
ShearSchedule make_schedule_range(int lo, int hi, double tau_cycles);

/// Carrier phase (omega_A + omega_B) * tau at pixel (a, b), measured from
/// the grid center so tau_cycles full cycles span each axis.
double carrier_phase(const FrequencyGrid& grid, double tau_cycles, int a, int b);

/// Delay in seconds equivalent to tau_cycles on this grid.
double tau_seconds(const FrequencyGrid& grid, double tau_cycles);

/// Throws std::invalid_argument on structural problems (fewer than 2 distinct
/// shears per arm, shears at or beyond the grid size, gaps between sorted
/// consecutive shears larger than the field support). Warns on stderr when an
/// arm has fewer than 3 shears, which leaves no redundancy margin for the
/// two-field reconstruction.
void validate_schedule(const ShearSchedule& schedule, const FrequencyGrid& grid);

}  // namespace jsi
