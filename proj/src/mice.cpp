#include "jsi/mice.hpp"

#include <cmath>
#include <stdexcept>

#include "jsi/errors.hpp"
#include "jsi/rng.hpp"

namespace jsi {

void ReconstructionConfig::validate() const {
    if (iterations < 1) throw std::invalid_argument("reconstruction: iterations must be >= 1");
    if (!(mask_epsilon > 0.0) || !(mask_epsilon < 1.0))
        throw std::invalid_argument("reconstruction: mask_epsilon must be in (0, 1)");
}

namespace {

void check_consistency(const ACSet& ac, const ComplexField& field, const char* who) {
    if (!(field.grid == ac.grid)) throw std::invalid_argument(std::string(who) + ": grid mismatch");
    if (!ac.grid.square()) throw std::invalid_argument(std::string(who) + ": grid must be square");
    if (!ac.carrier_removed)
        throw std::invalid_argument(std::string(who) + ": AC set must be carrier-free");
    const std::size_t expected = static_cast<std::size_t>(ac.schedule.pair_count());
    if (ac.ac.size() != expected) throw std::invalid_argument(std::string(who) + ": AC map count mismatch");
    for (const ComplexMap& m : ac.ac)
        if (m.rows() != ac.grid.n_signal || m.cols() != ac.grid.n_idler)
            throw std::invalid_argument(std::string(who) + ": AC map shape mismatch");
}

// Apply the relative-threshold mask: quotient where the denominator is
// healthy, zero elsewhere.
ComplexField finalize_update(const FrequencyGrid& grid, ComplexMap num, const RealMap& den,
                             double mask_epsilon, const char* who) {
    double den_max = 0.0;
    for (double d : den) den_max = std::max(den_max, d);
    if (den_max == 0.0)
        throw NumericalError(std::string(who) + ": zero denominator everywhere, no interference coverage");
    const double cutoff = mask_epsilon * den_max;
    ComplexField out{grid, ComplexMap(den.rows(), den.cols())};
    for (int r = 0; r < den.rows(); ++r)
        for (int c = 0; c < den.cols(); ++c)
            out.values(r, c) = den(r, c) >= cutoff ? num(r, c) / den(r, c) : Complex{0.0, 0.0};
    return out;
}

MaskMap mask_from_denominator(const RealMap& den, double mask_epsilon, int margin) {
    double den_max = 0.0;
    for (double d : den) den_max = std::max(den_max, d);
    const double cutoff = mask_epsilon * den_max;
    MaskMap mask(den.rows(), den.cols(), 0);
    for (int r = 0; r < den.rows(); ++r)
        for (int c = 0; c < den.cols(); ++c) {
            const bool interior = r >= margin && r < den.rows() - margin && c >= margin &&
                                  c < den.cols() - margin;
            mask(r, c) = (den(r, c) >= cutoff && interior) ? 1 : 0;
        }
    return mask;
}

}  // namespace

double model_error(const ACSet& ac, const ComplexField& e1, const ComplexField& e2) {
    check_consistency(ac, e1, "model_error");
    if (!(e2.grid == ac.grid)) throw std::invalid_argument("model_error: grid mismatch");
    const int n = ac.grid.n_signal;
    const int nk = static_cast<int>(ac.schedule.omega1.size());
    const int nl = static_cast<int>(ac.schedule.omega2.size());
    double err = 0.0;
    for (int k = 0; k < nk; ++k) {
        const int w1 = ac.schedule.omega1[k];
        for (int l = 0; l < nl; ++l) {
            const int w2 = ac.schedule.omega2[l];
            const ComplexMap& meas = ac.at(k, l);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    const Complex t1 = e1.values.value_or(a - w1, b);
                    const Complex t2 = e2.values.value_or(b, a - w2);
                    err += std::norm(meas(a, b) - t1 * std::conj(t2));
                }
        }
    }
    return err;
}

std::pair<ComplexField, RealMap> update_e1(const ACSet& ac, const ComplexField& e2,
                                           double mask_epsilon) {
    check_consistency(ac, e2, "update_e1");
    const int n = ac.grid.n_signal;
    const int nk = static_cast<int>(ac.schedule.omega1.size());
    const int nl = static_cast<int>(ac.schedule.omega2.size());

    ComplexMap num(n, n);
    RealMap den(n, n, 0.0);
    for (int k = 0; k < nk; ++k) {
        const int w1 = ac.schedule.omega1[k];
        for (int l = 0; l < nl; ++l) {
            const int w2 = ac.schedule.omega2[l];
            const ComplexMap& meas = ac.at(k, l);
            for (int u = 0; u < n; ++u) {
                const int a = u + w1;
                if (a < 0 || a >= n) continue;
                const int eta = a - w2;
                if (eta < 0 || eta >= n) continue;
                for (int v = 0; v < n; ++v) {
                    const Complex e2v = e2.values(v, eta);
                    num(u, v) += meas(a, v) * e2v;
                    den(u, v) += std::norm(e2v);
                }
            }
        }
    }
    ComplexField field = finalize_update(ac.grid, std::move(num), den, mask_epsilon, "update_e1");
    return {std::move(field), std::move(den)};
}

std::pair<ComplexField, RealMap> update_e2(const ACSet& ac, const ComplexField& e1,
                                           double mask_epsilon) {
    check_consistency(ac, e1, "update_e2");
    const int n = ac.grid.n_signal;
    const int nk = static_cast<int>(ac.schedule.omega1.size());
    const int nl = static_cast<int>(ac.schedule.omega2.size());

    ComplexMap num(n, n);
    RealMap den(n, n, 0.0);
    for (int k = 0; k < nk; ++k) {
        const int w1 = ac.schedule.omega1[k];
        for (int l = 0; l < nl; ++l) {
            const int w2 = ac.schedule.omega2[l];
            const ComplexMap& meas = ac.at(k, l);
            // E2(u, v) appears in AC pixel (v + w2, u) against E1(v + w2 - w1, u)
            for (int v = 0; v < n; ++v) {
                const int r = v + w2;
                if (r < 0 || r >= n) continue;
                const int rho = r - w1;
                if (rho < 0 || rho >= n) continue;
                for (int u = 0; u < n; ++u) {
                    const Complex e1v = e1.values(rho, u);
                    num(u, v) += std::conj(meas(r, u)) * e1v;
                    den(u, v) += std::norm(e1v);
                }
            }
        }
    }
    ComplexField field = finalize_update(ac.grid, std::move(num), den, mask_epsilon, "update_e2");
    return {std::move(field), std::move(den)};
}

ReconstructionResult reconstruct(const ACSet& ac, const ReconstructionConfig& config) {
    config.validate();
    const int n = ac.grid.n_signal;

    ComplexField e2{ac.grid, ComplexMap(n, n, Complex{1.0, 0.0})};
    if (config.init == ReconstructionConfig::Init::RandomPhase) {
        RngStream rng(config.init_seed);
        for (Complex& z : e2.values) z = std::polar(1.0, rng.uniform_phase());
    }
    check_consistency(ac, e2, "reconstruct");

    ReconstructionResult result;
    result.error_history.reserve(2 * config.iterations);
    ComplexField e1;
    RealMap den1, den2;
    for (int it = 0; it < config.iterations; ++it) {
        std::tie(e1, den1) = update_e1(ac, e2, config.mask_epsilon);
        result.error_history.push_back(model_error(ac, e1, e2));
        std::tie(e2, den2) = update_e2(ac, e1, config.mask_epsilon);
        result.error_history.push_back(model_error(ac, e1, e2));
    }

    result.e1 = std::move(e1);
    result.e2 = std::move(e2);
    result.mask_e1 = mask_from_denominator(den1, config.mask_epsilon, ac.boundary_margin);
    result.mask_e2 = mask_from_denominator(den2, config.mask_epsilon, ac.boundary_margin);
    return result;
}

}  // namespace jsi
