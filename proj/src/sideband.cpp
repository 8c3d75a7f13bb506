#include "jsi/sideband.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "jsi/fft.hpp"

namespace jsi {

std::string CarrierReport::summary() const {
    std::ostringstream ss;
    ss << (pass ? "pass" : "FAIL") << ": sideband at " << sideband_cycles
       << " cycles/axis, DC separation " << dc_separation << " (required >= " << required_separation
       << "), Nyquist " << nyquist_cycles << " cycles, sideband gap " << sideband_gap;
    return ss.str();
}

CarrierReport carrier_frequency_check(const ShearSchedule& schedule, const SidebandFilter& filter,
                                      const FrequencyGrid& grid) {
    const double n = static_cast<double>(std::min(grid.n_signal, grid.n_idler));
    const double f = std::abs(schedule.tau_cycles);
    CarrierReport r;
    r.sideband_cycles = f;
    r.dc_separation = f * std::sqrt(2.0);
    r.required_separation = filter.dc_radius + filter.radius;
    r.nyquist_cycles = n / 2.0;
    // the conjugate sideband sits at (-tau, -tau); distances wrap on the DFT torus
    r.sideband_gap = std::sqrt(2.0) * std::min(2.0 * f, n - 2.0 * f);
    r.pass = r.dc_separation >= r.required_separation && f <= r.nyquist_cycles &&
             r.sideband_gap >= 2.0 * filter.radius;
    return r;
}

namespace {

// Torus distance between DFT index (p, q) and a (possibly fractional) center.
double torus_distance(int p, int q, double cr, double cc, int rows, int cols) {
    double dr = std::fmod(std::abs(p - cr), static_cast<double>(rows));
    double dc = std::fmod(std::abs(q - cc), static_cast<double>(cols));
    dr = std::min(dr, rows - dr);
    dc = std::min(dc, cols - dc);
    return std::sqrt(dr * dr + dc * dc);
}

}  // namespace

ComplexMap extract_ac(const RealMap& intensity, const ShearSchedule& schedule,
                      const SidebandFilter& filter, const FrequencyGrid& grid, bool remove_carrier) {
    const CarrierReport report = carrier_frequency_check(schedule, filter, grid);
    if (!report.pass)
        throw std::invalid_argument("extract_ac: carrier check failed (" + report.summary() + ")");
    if (intensity.rows() != grid.n_signal || intensity.cols() != grid.n_idler)
        throw std::invalid_argument("extract_ac: map shape does not match grid");

    const int rows = intensity.rows(), cols = intensity.cols();
    ComplexMap spectrum = fft2(intensity);

    // The product T1 * conj(T2) rides exp(-i*carrier), which under the
    // e^{-2 pi i ...} kernel lands at index (-tau, -tau) mod n.
    const double cr = std::fmod(static_cast<double>(rows) - schedule.tau_cycles, static_cast<double>(rows));
    const double cc = std::fmod(static_cast<double>(cols) - schedule.tau_cycles, static_cast<double>(cols));
    for (int p = 0; p < rows; ++p)
        for (int q = 0; q < cols; ++q) {
            const double d = torus_distance(p, q, cr, cc, rows, cols) / filter.radius;
            spectrum(p, q) *= std::exp(-std::pow(d, 2.0 * filter.order));
        }

    ComplexMap ac = ifft2(spectrum);
    if (remove_carrier) {
        for (int a = 0; a < rows; ++a)
            for (int b = 0; b < cols; ++b)
                ac(a, b) *= std::polar(1.0, carrier_phase(grid, schedule.tau_cycles, a, b));
    }
    return ac;
}

ComplexMap direct_ac(const ComplexField& e1, const ComplexField& e2, int k, int l,
                     const ShearSchedule& schedule) {
    if (!(e1.grid == e2.grid)) throw std::invalid_argument("direct_ac: grids differ");
    if (!e1.grid.square()) throw std::invalid_argument("direct_ac: grid must be square");
    const int n = e1.grid.n_signal;
    const int w1 = schedule.omega1.at(k);
    const int w2 = schedule.omega2.at(l);
    ComplexMap ac(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Complex t1 = e1.values.value_or(a - w1, b);
            const Complex t2 = e2.values.value_or(b, a - w2);
            ac(a, b) = t1 * std::conj(t2);
        }
    return ac;
}

ACSet extract_ac_set(const InterferogramSet& interferograms, const SidebandFilter& filter,
                     bool remove_carrier) {
    ACSet set;
    set.grid = interferograms.grid;
    set.schedule = interferograms.schedule;
    set.carrier_removed = remove_carrier;
    set.boundary_margin = kLeakageMargin;
    set.ac.resize(interferograms.counts.size());
    for (std::size_t i = 0; i < interferograms.counts.size(); ++i) {
        const CountMap& counts = interferograms.counts[i];
        RealMap intensity(counts.rows(), counts.cols());
        for (int a = 0; a < counts.rows(); ++a)
            for (int b = 0; b < counts.cols(); ++b) intensity(a, b) = static_cast<double>(counts(a, b));
        set.ac[i] = extract_ac(intensity, set.schedule, filter, set.grid, remove_carrier);
    }
    return set;
}

ACSet direct_ac_set(const ComplexField& e1, const ComplexField& e2, const ShearSchedule& schedule) {
    ACSet set;
    set.grid = e1.grid;
    set.schedule = schedule;
    set.carrier_removed = true;
    set.boundary_margin = 0;
    const int nk = static_cast<int>(schedule.omega1.size());
    const int nl = static_cast<int>(schedule.omega2.size());
    set.ac.resize(static_cast<std::size_t>(nk) * nl);
    for (int k = 0; k < nk; ++k)
        for (int l = 0; l < nl; ++l) set.ac[schedule.pair_index(k, l)] = direct_ac(e1, e2, k, l, schedule);
    return set;
}

}  // namespace jsi
