#include "jsi/field.hpp"

#include <cmath>
#include <stdexcept>

namespace jsi {

ComplexField assemble_field(const FrequencyGrid& grid, const RealMap& amplitude, const RealMap& phase) {
    if (!amplitude.same_shape(phase))
        throw std::invalid_argument("assemble_field: amplitude and phase shapes differ");
    if (amplitude.rows() != grid.n_signal || amplitude.cols() != grid.n_idler)
        throw std::invalid_argument("assemble_field: map shape does not match grid");
    ComplexField out{grid, ComplexMap(amplitude.rows(), amplitude.cols())};
    for (int u = 0; u < amplitude.rows(); ++u)
        for (int v = 0; v < amplitude.cols(); ++v) {
            const double a = amplitude(u, v);
            // keep exact zeros exact, whatever the phase
            out.values(u, v) = (a == 0.0) ? Complex{0.0, 0.0} : std::polar(a, phase(u, v));
        }
    return out;
}

RealMap field_amplitude(const ComplexField& field) {
    RealMap out(field.rows(), field.cols());
    for (int u = 0; u < field.rows(); ++u)
        for (int v = 0; v < field.cols(); ++v) out(u, v) = std::abs(field.values(u, v));
    return out;
}

RealMap field_phase(const ComplexField& field) {
    RealMap out(field.rows(), field.cols());
    for (int u = 0; u < field.rows(); ++u)
        for (int v = 0; v < field.cols(); ++v) {
            const Complex z = field.values(u, v);
            out(u, v) = (z == Complex{0.0, 0.0}) ? 0.0 : std::arg(z);
        }
    return out;
}

ComplexField permute_axes(const ComplexField& field) {
    if (!field.grid.square())
        throw std::invalid_argument("permute_axes: grid must be square");
    ComplexField out{field.grid, ComplexMap(field.cols(), field.rows())};
    for (int u = 0; u < field.rows(); ++u)
        for (int v = 0; v < field.cols(); ++v) out.values(v, u) = field.values(u, v);
    return out;
}

ComplexField shift_field(const ComplexField& field, int shift_rows, int shift_cols) {
    ComplexField out{field.grid, ComplexMap(field.rows(), field.cols())};
    for (int u = 0; u < field.rows(); ++u)
        for (int v = 0; v < field.cols(); ++v)
            out.values(u, v) = field.values.value_or(u - shift_rows, v - shift_cols);
    return out;
}

}  // namespace jsi
