#pragma once

#include <string>
#include <variant>
#include <vector>

#include "jsi/array2.hpp"
#include "jsi/field.hpp"
#include "jsi/grid.hpp"
#include "jsi/png_io.hpp"

namespace jsi {

/// Separable Gaussian amplitude centered on the grid, peak value 1. Sigmas
/// are in nm along the signal (rows) and idler (columns) axes.
RealMap gaussian_jsa(const FrequencyGrid& grid, double sigma_signal_nm, double sigma_idler_nm);

struct PolyTerm {
    int power_signal = 0;
    int power_idler = 0;
    double coeff = 0.0;  // rad / nm^(p+q)

    friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};

/// phase(u, v) = sum c_pq * dlambda_s^p * dlambda_i^q on wavelength offsets
/// from grid center. Stored unwrapped.
RealMap polynomial_jsp(const FrequencyGrid& grid, const std::vector<PolyTerm>& coeffs);

/// Nearest-neighbor resample of a grayscale image to the grid, intensities
/// mapped linearly from [min, max] to [0, scale_rad]. A zero-dynamic-range
/// image yields an all-zero phase (with a warning on stderr), not an error.
RealMap phase_from_image(const GrayImage& image, const FrequencyGrid& grid, double scale_rad);
RealMap phase_from_image(const std::string& png_path, const FrequencyGrid& grid, double scale_rad);

/// Declarative ground-truth state description, mirrored by the JSON schema
/// {grid:{n,center_nm,span_nm}, jsa:{type:"gaussian",...}, jsp:{...}}.
struct GaussianJsaSpec {
    double sigma_s_nm = 1.5;
    double sigma_i_nm = 1.5;
};

struct PolynomialJspSpec {
    std::vector<PolyTerm> coeffs;
};

struct ImageJspSpec {
    std::string path;
    double scale_rad = 0.0;
};

struct StateSpec {
    int n = 32;
    double center_nm = 820.0;
    double span_nm = 10.0;
    GaussianJsaSpec jsa;
    std::variant<PolynomialJspSpec, ImageJspSpec> jsp = PolynomialJspSpec{};

    FrequencyGrid grid() const { return make_grid(n, center_nm, span_nm); }
};

/// The default simulation state: 32 px, 10 nm around 820 nm, uncorrelated
/// Gaussian amplitude, polynomial phase dominated by the cross term so that
/// frequency correlations live in the phase only.
StateSpec default_state_spec();

/// Ground-truth biphoton wavefunction A for a state spec (peak amplitude 1).
ComplexField build_truth(const StateSpec& spec);

StateSpec state_spec_from_json_text(const std::string& text);
std::string state_spec_to_json_text(const StateSpec& spec);
StateSpec load_state_spec(const std::string& path);

}  // namespace jsi
