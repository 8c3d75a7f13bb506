#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "jsi/field.hpp"
#include "jsi/sideband.hpp"

namespace jsi {

struct ReconstructionConfig {
    enum class Init { UnitAmplitude, RandomPhase };

    int iterations = 20;
    Init init = Init::UnitAmplitude;
    std::uint64_t init_seed = 0;   // used by RandomPhase
    double mask_epsilon = 1e-3;    // relative threshold on update denominators

    void validate() const;
};

struct ReconstructionResult {
    ComplexField e1;
    ComplexField e2;
    MaskMap mask_e1;  // true where the data constrained the estimate
    MaskMap mask_e2;
    std::vector<double> error_history;  // model error after each half-update
};

/// Total squared residual between measured AC maps and the model
/// T1 * conj(T2), summed over all pixels and shear pairs; out-of-range
/// shifted coordinates make the model term zero (carrier-free convention).
double model_error(const ACSet& ac, const ComplexField& e1, const ComplexField& e2);

/// Exact least-squares update of E1 with E2 held fixed:
///   E1(u,v) = sum_{k,l} AC_{k,l}(u+w1_k, v) * E2(v, u+w1_k-w2_l)
///           / sum_{k,l} |E2(v, u+w1_k-w2_l)|^2
/// Out-of-range coordinates contribute zero to both sums. Pixels whose
/// denominator falls below mask_epsilon times the map maximum are zeroed and
/// excluded from the coverage mask. Returns the field and the denominator
/// map. Throws NumericalError when the denominator is zero everywhere.
std::pair<ComplexField, RealMap> update_e1(const ACSet& ac, const ComplexField& e2,
                                           double mask_epsilon);

/// Mirror update of E2 with E1 held fixed:
///   E2(a,b) = sum_{k,l} conj(AC_{k,l}(b+w2_l, a)) * E1(b+w2_l-w1_k, a)
///           / sum_{k,l} |E1(b+w2_l-w1_k, a)|^2
std::pair<ComplexField, RealMap> update_e2(const ACSet& ac, const ComplexField& e1,
                                           double mask_epsilon);

/// Alternating reconstruction: initialize E2, then run config.iterations
/// rounds of update_e1 / update_e2, recording the model error after each
/// half-update. Final masks combine the last denominators with the AC set's
/// boundary-confidence margin.
ReconstructionResult reconstruct(const ACSet& ac, const ReconstructionConfig& config);

}  // namespace jsi
