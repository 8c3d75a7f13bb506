#include "jsi/grid.hpp"

#include <stdexcept>
#include <string>

namespace jsi {

FrequencyGrid make_grid(int n, double center_nm, double span_nm) {
    if (n < 8)
        throw std::invalid_argument("make_grid: pixel count must be >= 8, got " + std::to_string(n));
    if (!(center_nm > 0.0))
        throw std::invalid_argument("make_grid: center wavelength must be positive");
    if (!(span_nm > 0.0))
        throw std::invalid_argument("make_grid: span must be positive");
    FrequencyGrid g;
    g.n_signal = n;
    g.n_idler = n;
    g.center_nm = center_nm;
    g.span_nm = span_nm;
    return g;
}

}  // namespace jsi
