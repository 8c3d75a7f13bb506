#pragma once

#include "jsi/array2.hpp"

namespace jsi {

/// Wrap to (-pi, pi]; the boundary maps to +pi. Rejects non-finite input.
double wrap_phase(double x);

struct PhaseComparison {
    double rmse_rad = 0.0;
    double offset_rad = 0.0;   // constant removed from the estimate
    long pixels_used = 0;
    double weight_total = 0.0;
};

/// Circular-mean constant-phase offset of (estimate - truth) over the masked,
/// weighted pixels: arg(sum w * exp(i*(est - truth))). Exact for constant
/// offsets regardless of wrapping. Throws on an empty mask or zero weight.
double align_constant_phase(const RealMap& estimate, const RealMap& truth, const RealMap& weights,
                            const MaskMap& mask);

/// sqrt(sum w * wrap(est - offset - truth)^2 / sum w) over the mask.
double weighted_rmse(const RealMap& estimate, const RealMap& truth, const RealMap& weights,
                     const MaskMap& mask, double offset = 0.0);

/// Alignment followed by intensity-weighted RMSE; the paper-style figure of
/// merit for a retrieved phase map.
PhaseComparison compare_phases(const RealMap& estimate, const RealMap& truth, const RealMap& weights,
                               const MaskMap& mask);

}  // namespace jsi
