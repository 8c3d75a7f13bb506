#pragma once

#include "jsi/array2.hpp"
#include "jsi/grid.hpp"

namespace jsi {

/// A 2-D complex field on a frequency grid. Row index runs along the first
/// frequency axis (signal / omega_A), column index along the second
/// (idler / omega_B). Immutable by convention: operations return new fields.
struct ComplexField {
    FrequencyGrid grid;
    ComplexMap values;

    int rows() const { return values.rows(); }
    int cols() const { return values.cols(); }
};

/// values = amplitude * exp(i * phase). Shapes must match each other and
/// the grid.
ComplexField assemble_field(const FrequencyGrid& grid, const RealMap& amplitude, const RealMap& phase);

/// |values| per pixel.
RealMap field_amplitude(const ComplexField& field);

/// arg(values) per pixel, in (-pi, pi]. Zero-amplitude pixels report 0.
RealMap field_phase(const ComplexField& field);

/// output(u, v) = input(v, u). Square grids only; an involution.
ComplexField permute_axes(const ComplexField& field);

/// output(u, v) = input(u - shift_rows, v - shift_cols), zero fill outside
/// the original support (non-circular).
ComplexField shift_field(const ComplexField& field, int shift_rows, int shift_cols);

}  // namespace jsi
