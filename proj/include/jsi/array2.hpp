#pragma once

#include <cassert>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace jsi {

using Complex = std::complex<double>;

/// Dense row-major 2-D array with value semantics.
template <typename T>
class Array2 {
public:
    Array2() = default;
    Array2(int rows, int cols, T fill = T{})
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows < 0 ? 0 : rows) * static_cast<std::size_t>(cols < 0 ? 0 : cols), fill) {
        assert(rows >= 0 && cols >= 0);
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    T& operator()(int r, int c) {
        assert(in_bounds(r, c));
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }
    const T& operator()(int r, int c) const {
        assert(in_bounds(r, c));
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    bool in_bounds(int r, int c) const { return r >= 0 && r < rows_ && c >= 0 && c < cols_; }

    /// Value at (r, c), or `outside` when the coordinate falls off the array.
    T value_or(int r, int c, T outside = T{}) const {
        return in_bounds(r, c) ? (*this)(r, c) : outside;
    }

    template <typename U>
    bool same_shape(const Array2<U>& other) const {
        return rows_ == other.rows() && cols_ == other.cols();
    }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }
    auto begin() { return data_.begin(); }
    auto end() { return data_.end(); }
    auto begin() const { return data_.begin(); }
    auto end() const { return data_.end(); }

    friend bool operator==(const Array2& a, const Array2& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

using RealMap = Array2<double>;
using ComplexMap = Array2<Complex>;
using MaskMap = Array2<std::uint8_t>;
using CountMap = Array2<std::uint32_t>;

}  // namespace jsi
