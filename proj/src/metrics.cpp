#include "jsi/metrics.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace jsi {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

void check_shapes(const RealMap& estimate, const RealMap& truth, const RealMap& weights,
                  const MaskMap& mask) {
    if (!estimate.same_shape(truth) || !estimate.same_shape(weights) || !estimate.same_shape(mask))
        throw std::invalid_argument("phase metrics: shapes differ");
}
}  // namespace

double wrap_phase(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("wrap_phase: non-finite input");
    double w = std::remainder(x, kTwoPi);
    if (w <= -kPi) w += kTwoPi;
    return w;
}

double align_constant_phase(const RealMap& estimate, const RealMap& truth, const RealMap& weights,
                            const MaskMap& mask) {
    check_shapes(estimate, truth, weights, mask);
    std::complex<double> acc{0.0, 0.0};
    double total = 0.0;
    for (int r = 0; r < estimate.rows(); ++r)
        for (int c = 0; c < estimate.cols(); ++c) {
            if (!mask(r, c)) continue;
            const double w = weights(r, c);
            if (w <= 0.0) continue;
            acc += w * std::polar(1.0, estimate(r, c) - truth(r, c));
            total += w;
        }
    if (total <= 0.0)
        throw std::invalid_argument("align_constant_phase: empty mask or zero total weight");
    return std::arg(acc);
}

double weighted_rmse(const RealMap& estimate, const RealMap& truth, const RealMap& weights,
                     const MaskMap& mask, double offset) {
    check_shapes(estimate, truth, weights, mask);
    double num = 0.0, total = 0.0;
    for (int r = 0; r < estimate.rows(); ++r)
        for (int c = 0; c < estimate.cols(); ++c) {
            if (!mask(r, c)) continue;
            const double w = weights(r, c);
            if (w <= 0.0) continue;
            const double d = wrap_phase(estimate(r, c) - offset - truth(r, c));
            num += w * d * d;
            total += w;
        }
    if (total <= 0.0) throw std::invalid_argument("weighted_rmse: empty mask or zero total weight");
    return std::sqrt(num / total);
}

PhaseComparison compare_phases(const RealMap& estimate, const RealMap& truth, const RealMap& weights,
                               const MaskMap& mask) {
    PhaseComparison cmp;
    cmp.offset_rad = align_constant_phase(estimate, truth, weights, mask);
    cmp.rmse_rad = weighted_rmse(estimate, truth, weights, mask, cmp.offset_rad);
    for (int r = 0; r < estimate.rows(); ++r)
        for (int c = 0; c < estimate.cols(); ++c)
            if (mask(r, c) && weights(r, c) > 0.0) {
                ++cmp.pixels_used;
                cmp.weight_total += weights(r, c);
            }
    return cmp;
}

}  // namespace jsi
