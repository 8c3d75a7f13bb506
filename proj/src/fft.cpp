#include "jsi/fft.hpp"

#include <cmath>
#include <vector>

namespace jsi {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 Cooley-Tukey, in place. sign = -1 forward, +1 inverse.
void fft_pow2(Complex* x, int n, int sign) {
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        const double ang = sign * kTwoPi / len;
        const Complex wlen = std::polar(1.0, ang);
        for (int i = 0; i < n; i += len) {
            Complex w{1.0, 0.0};
            for (int j = 0; j < len / 2; ++j) {
                const Complex a = x[i + j];
                const Complex b = x[i + j + len / 2] * w;
                x[i + j] = a + b;
                x[i + j + len / 2] = a - b;
                w *= wlen;
            }
        }
    }
}

// Direct summation for arbitrary lengths.
void dft_naive(Complex* x, int n, int sign) {
    std::vector<Complex> tw(n);
    for (int j = 0; j < n; ++j) tw[j] = std::polar(1.0, sign * kTwoPi * j / n);
    std::vector<Complex> out(n);
    for (int k = 0; k < n; ++k) {
        Complex acc{0.0, 0.0};
        for (int j = 0; j < n; ++j) acc += x[j] * tw[static_cast<int>((static_cast<long long>(j) * k) % n)];
        out[k] = acc;
    }
    for (int k = 0; k < n; ++k) x[k] = out[k];
}

void fft_1d(Complex* x, int n, int sign) {
    if (n <= 1) return;
    if (is_pow2(n))
        fft_pow2(x, n, sign);
    else
        dft_naive(x, n, sign);
}

void transform2(ComplexMap& m, int sign) {
    const int rows = m.rows(), cols = m.cols();
    for (int r = 0; r < rows; ++r) fft_1d(&m(r, 0), cols, sign);
    std::vector<Complex> col(rows);
    for (int c = 0; c < cols; ++c) {
        for (int r = 0; r < rows; ++r) col[r] = m(r, c);
        fft_1d(col.data(), rows, sign);
        for (int r = 0; r < rows; ++r) m(r, c) = col[r];
    }
}

}  // namespace

ComplexMap fft2(const ComplexMap& in) {
    ComplexMap out = in;
    transform2(out, -1);
    return out;
}

ComplexMap fft2(const RealMap& in) {
    ComplexMap tmp(in.rows(), in.cols());
    for (int r = 0; r < in.rows(); ++r)
        for (int c = 0; c < in.cols(); ++c) tmp(r, c) = Complex{in(r, c), 0.0};
    transform2(tmp, -1);
    return tmp;
}

ComplexMap ifft2(const ComplexMap& in) {
    ComplexMap out = in;
    transform2(out, +1);
    const double norm = 1.0 / (static_cast<double>(in.rows()) * in.cols());
    for (Complex& z : out) z *= norm;
    return out;
}

}  // namespace jsi
