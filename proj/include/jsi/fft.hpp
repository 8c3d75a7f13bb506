#pragma once

#include "jsi/array2.hpp"

namespace jsi {

/// Unnormalized forward 2-D DFT (kernel exp(-2*pi*i*(k*a/rows + l*b/cols))).
/// Grids here are tiny (tens of pixels per axis), so a self-contained
/// radix-2 transform with a direct-summation fallback for non-power-of-two
/// lengths keeps results bit-reproducible and thread-safe with no shared
/// planning state.
ComplexMap fft2(const ComplexMap& in);
ComplexMap fft2(const RealMap& in);

/// Inverse 2-D DFT with 1/(rows*cols) normalization; ifft2(fft2(x)) == x.
ComplexMap ifft2(const ComplexMap& in);

}  // namespace jsi
