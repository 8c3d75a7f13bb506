#include "jsi/franson.hpp"

#include <cmath>
#include <stdexcept>

#include "jsi/rng.hpp"

namespace jsi {

void NoiseModel::validate() const {
    if (!(peak_counts >= 0.0) || !std::isfinite(peak_counts))
        throw std::invalid_argument("noise model: peak counts must be finite and >= 0");
    if (!(efficiency > 0.0) || efficiency > 1.0)
        throw std::invalid_argument("noise model: efficiency must be in (0, 1]");
    if (!(repetition_rate_hz > 0.0))
        throw std::invalid_argument("noise model: repetition rate must be positive");
}

RealMap coincidence_probability(const ComplexField& e1, const ComplexField& e2, int k, int l,
                                const ShearSchedule& schedule) {
    if (!(e1.grid == e2.grid)) throw std::invalid_argument("coincidence_probability: grids differ");
    if (!e1.grid.square()) throw std::invalid_argument("coincidence_probability: grid must be square");
    if (k < 0 || k >= static_cast<int>(schedule.omega1.size()) || l < 0 ||
        l >= static_cast<int>(schedule.omega2.size()))
        throw std::invalid_argument("coincidence_probability: shear index out of range");

    const int n = e1.grid.n_signal;
    const int w1 = schedule.omega1[k];
    const int w2 = schedule.omega2[l];
    RealMap p(n, n);
    for (int a = 0; a < n; ++a) {
        const Complex* row1 = (a - w1 >= 0 && a - w1 < n) ? &e1.values(a - w1, 0) : nullptr;
        for (int b = 0; b < n; ++b) {
            const Complex t1 = row1 ? row1[b] : Complex{0.0, 0.0};
            const Complex t2 = e2.values.value_or(b, a - w2);
            const Complex z = t1 + t2 * std::polar(1.0, carrier_phase(e1.grid, schedule.tau_cycles, a, b));
            p(a, b) = std::norm(z);
        }
    }
    return p;
}

InterferogramSet synthesize_interferograms(const ComplexField& e1, const ComplexField& e2,
                                           const ShearSchedule& schedule, const NoiseModel& noise,
                                           std::uint64_t seed) {
    noise.validate();
    validate_schedule(schedule, e1.grid);

    const int nk = static_cast<int>(schedule.omega1.size());
    const int nl = static_cast<int>(schedule.omega2.size());

    std::vector<RealMap> probability(static_cast<std::size_t>(nk) * nl);
    double p_max = 0.0;
    for (int k = 0; k < nk; ++k)
        for (int l = 0; l < nl; ++l) {
            RealMap p = coincidence_probability(e1, e2, k, l, schedule);
            for (double v : p) p_max = std::max(p_max, v);
            probability[schedule.pair_index(k, l)] = std::move(p);
        }

    const double scale = (p_max > 0.0 && noise.peak_counts > 0.0) ? noise.peak_counts / p_max : 0.0;
    const double accidental = noise.accidental_mean();

    InterferogramSet set;
    set.grid = e1.grid;
    set.schedule = schedule;
    set.noise = noise;
    set.seed = seed;
    set.counts.resize(probability.size());

    for (int k = 0; k < nk; ++k)
        for (int l = 0; l < nl; ++l) {
            const int idx = schedule.pair_index(k, l);
            const RealMap& p = probability[idx];
            CountMap counts(p.rows(), p.cols());
            if (noise.deterministic) {
                for (int a = 0; a < p.rows(); ++a)
                    for (int b = 0; b < p.cols(); ++b)
                        counts(a, b) = static_cast<std::uint32_t>(std::llround(scale * p(a, b)));
            } else {
                RngStream rng(seed_combine(seed_combine(seed, static_cast<std::uint64_t>(k)),
                                           static_cast<std::uint64_t>(l)));
                for (int a = 0; a < p.rows(); ++a)
                    for (int b = 0; b < p.cols(); ++b) {
                        long long c = sample_poisson(scale * p(a, b), rng);
                        if (accidental > 0.0) c += sample_poisson(accidental, rng);
                        counts(a, b) = static_cast<std::uint32_t>(c);
                    }
            }
            set.counts[idx] = std::move(counts);
        }
    return set;
}

}  // namespace jsi
