#include "jsi/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <set>
#include <stdexcept>
#include <string>

namespace jsi {

namespace {
constexpr double kTwoPi = 6.283185307179586476925287;
}

ShearSchedule make_schedule_range(int lo, int hi, double tau_cycles) {
    if (hi < lo) throw std::invalid_argument("make_schedule_range: empty range");
    ShearSchedule s;
    for (int w = lo; w <= hi; ++w) s.omega1.push_back(w);
    s.omega2 = s.omega1;
    s.tau_cycles = tau_cycles;
    return s;
}

ShearSchedule make_schedule_preset_8() { return make_schedule_range(-4, 3, 8.0); }
ShearSchedule make_schedule_preset_32() { return make_schedule_range(-16, 15, 8.0); }

double carrier_phase(const FrequencyGrid& grid, double tau_cycles, int a, int b) {
    const double theta = kTwoPi * tau_cycles / grid.n_signal;  // rad per pixel per axis
    return theta * ((a - grid.center_index_signal()) + (b - grid.center_index_idler()));
}

double tau_seconds(const FrequencyGrid& grid, double tau_cycles) {
    return kTwoPi * tau_cycles / (grid.n_signal * grid.angular_pitch_signal());
}

namespace {

void validate_arm(const std::vector<int>& shears, const FrequencyGrid& grid, const char* name) {
    std::set<int> distinct(shears.begin(), shears.end());
    if (distinct.size() < 2)
        throw std::invalid_argument(std::string("schedule: arm ") + name + " needs >= 2 distinct shears");
    if (distinct.size() < 3)
        std::cerr << "schedule: arm " << name
                  << " has only 2 shears; no redundancy margin for two-field retrieval\n";
    const int n = std::min(grid.n_signal, grid.n_idler);
    std::vector<int> sorted(distinct.begin(), distinct.end());
    for (int w : sorted)
        if (std::abs(w) >= n)
            throw std::invalid_argument(std::string("schedule: shear |") + std::to_string(w) +
                                        "| px on arm " + name + " is >= the grid size");
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] - sorted[i - 1] > n)
            throw std::invalid_argument(std::string("schedule: consecutive shears on arm ") + name +
                                        " differ by more than the field support; interferograms cannot overlap");
}

}  // namespace

void validate_schedule(const ShearSchedule& schedule, const FrequencyGrid& grid) {
    validate_arm(schedule.omega1, grid, "omega1");
    validate_arm(schedule.omega2, grid, "omega2");
    if (!std::isfinite(schedule.tau_cycles))
        throw std::invalid_argument("schedule: tau must be finite");
}

}  // namespace jsi
