#pragma once

#include <stdexcept>
#include <string>

namespace jsi {

/// Raised when an algorithm cannot proceed numerically (all-zero denominators,
/// non-finite intermediate values, too many failed Monte-Carlo repeats).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the binary container reader/writer.
class ContainerError : public std::runtime_error {
public:
    enum class Kind { BadMagic, VersionMismatch, Truncated, Malformed, Io };

    ContainerError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Raised on unreadable or undecodable raster images.
class ImageError : public std::runtime_error {
public:
    explicit ImageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace jsi
