#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jsi {

struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // row-major, one byte per pixel

    std::uint8_t at(int row, int col) const {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }
};

/// Decode a PNG file to 8-bit grayscale. Color and palette images are
/// reduced to luma; 16-bit channels are stripped to 8. Throws ImageError
/// on unreadable or undecodable input.
GrayImage read_png_gray(const std::string& path);

/// Write an 8-bit grayscale PNG. Compression settings are fixed so identical
/// inputs give byte-identical files.
void write_png_gray(const std::string& path, const GrayImage& image);

}  // namespace jsi
