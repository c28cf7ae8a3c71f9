#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polarity {

// Base class for all errors raised by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem-level failure (open, read, write).
class io_error : public error {
public:
    explicit io_error(const std::string& msg) : error(msg) {}
};

// Malformed input data; carries the byte offset where parsing gave up.
class format_error : public error {
public:
    format_error(const std::string& msg, std::size_t byte_offset)
        : error(msg + " (byte offset " + std::to_string(byte_offset) + ")"),
          offset_(byte_offset) {}

    std::size_t byte_offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Input is well-formed but uses a feature this library does not handle.
class unsupported_format_error : public error {
public:
    explicit unsupported_format_error(const std::string& msg) : error(msg) {}
};

// Histogram has fewer than two occupied bins, so no threshold separates
// two classes.
class degenerate_histogram_error : public error {
public:
    explicit degenerate_histogram_error(const std::string& msg) : error(msg) {}
};

} // namespace polarity
