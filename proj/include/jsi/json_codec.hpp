#pragma once

#include "json.hpp"
#include "jsi/franson.hpp"
#include "jsi/grid.hpp"
#include "jsi/schedule.hpp"

namespace jsi {

// JSON encodings shared by the container headers and the sweep reports.

inline nlohmann::json grid_to_json(const FrequencyGrid& g) {
    return {{"n_signal", g.n_signal},
            {"n_idler", g.n_idler},
            {"center_nm", g.center_nm},
            {"span_nm", g.span_nm}};
}

inline FrequencyGrid grid_from_json(const nlohmann::json& j) {
    FrequencyGrid g;
    g.n_signal = j.at("n_signal").get<int>();
    g.n_idler = j.at("n_idler").get<int>();
    g.center_nm = j.at("center_nm").get<double>();
    g.span_nm = j.at("span_nm").get<double>();
    return g;
}

inline nlohmann::json schedule_to_json(const ShearSchedule& s) {
    return {{"omega1", s.omega1}, {"omega2", s.omega2}, {"tau_cycles", s.tau_cycles}};
}

inline ShearSchedule schedule_from_json(const nlohmann::json& j) {
    ShearSchedule s;
    s.omega1 = j.at("omega1").get<std::vector<int>>();
    s.omega2 = j.at("omega2").get<std::vector<int>>();
    s.tau_cycles = j.at("tau_cycles").get<double>();
    return s;
}

inline nlohmann::json noise_to_json(const NoiseModel& n) {
    return {{"peak_counts", n.peak_counts},
            {"efficiency", n.efficiency},
            {"repetition_rate_hz", n.repetition_rate_hz},
            {"deterministic", n.deterministic}};
}

inline NoiseModel noise_from_json(const nlohmann::json& j) {
    NoiseModel n;
    n.peak_counts = j.at("peak_counts").get<double>();
    n.efficiency = j.at("efficiency").get<double>();
    n.repetition_rate_hz = j.at("repetition_rate_hz").get<double>();
    n.deterministic = j.value("deterministic", false);
    return n;
}

}  // namespace jsi
