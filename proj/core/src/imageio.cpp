#include "polarity/imageio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include "polarity/errors.hpp"

namespace polarity {

int rgb_to_gray(int r, int g, int b) {
    return round_half_up(0.299 * r + 0.587 * g + 0.114 * b);
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open " + path + " for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw io_error("read failure on " + path);
    }
    return std::move(buf).str();
}

// Cursor over the raw file bytes; every failure reports the byte offset at
// which parsing stopped.
struct Parser {
    const std::string& data;
    std::size_t pos = 0;

    bool eof() const { return pos >= data.size(); }

    // Header tokens may be separated by whitespace and '#' comments.
    void skip_separators() {
        while (!eof()) {
            const unsigned char c = static_cast<unsigned char>(data[pos]);
            if (c == '#') {
                while (!eof() && data[pos] != '\n') ++pos;
            } else if (std::isspace(c)) {
                ++pos;
            } else {
                break;
            }
        }
    }

    long parse_uint(const char* what) {
        skip_separators();
        if (eof() || !std::isdigit(static_cast<unsigned char>(data[pos]))) {
            throw format_error(std::string("expected ") + what, pos);
        }
        long v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(data[pos]))) {
            v = v * 10 + (data[pos] - '0');
            if (v > 1000000000L) {
                throw format_error(std::string(what) + " is implausibly large", pos);
            }
            ++pos;
        }
        return v;
    }

    // Binary rasters start exactly one whitespace byte after the maxval.
    void expect_single_separator() {
        if (eof() || !std::isspace(static_cast<unsigned char>(data[pos]))) {
            throw format_error("expected a whitespace byte before the raster", pos);
        }
        ++pos;
    }

    long read_binary_sample(long maxval) {
        const int bytes = maxval > 255 ? 2 : 1;
        if (pos + bytes > data.size()) {
            throw format_error("raster truncated", data.size());
        }
        long v = static_cast<unsigned char>(data[pos++]);
        if (bytes == 2) {
            v = (v << 8) | static_cast<unsigned char>(data[pos++]);
        }
        return v;
    }
};

std::uint8_t rescale(long v, long maxval) {
    if (maxval == 255) {
        return static_cast<std::uint8_t>(v);
    }
    return clamp_level(round_half_up(static_cast<double>(v) * 255.0 /
                                     static_cast<double>(maxval)));
}

} // namespace

GrayImage read_gray(const std::string& path) {
    const std::string data = slurp(path);
    Parser p{data};

    if (data.size() < 2 || data[0] != 'P') {
        throw format_error("not a PNM file (missing P* magic)", 0);
    }
    const char kind = data[1];
    if (kind != '2' && kind != '3' && kind != '5' && kind != '6') {
        throw unsupported_format_error(
            std::string("unsupported PNM variant P") + kind +
            " in " + path + " (P2/P3/P5/P6 are handled)");
    }
    p.pos = 2;
    const bool color = kind == '3' || kind == '6';
    const bool binary = kind == '5' || kind == '6';

    const long width = p.parse_uint("width");
    const long height = p.parse_uint("height");
    if (width <= 0 || height <= 0) {
        throw format_error("image dimensions must be positive", p.pos);
    }
    if (width * height > 100000000L) {
        throw format_error("image implausibly large", p.pos);
    }
    const long maxval = p.parse_uint("maxval");
    if (maxval <= 0) {
        throw format_error("maxval must be positive", p.pos);
    }
    if (maxval > 65535) {
        throw unsupported_format_error("maxval " + std::to_string(maxval) +
                                       " exceeds 65535 in " + path);
    }
    if (binary) {
        p.expect_single_separator();
    }

    const long n_pixels = width * height;
    const long samples_per_pixel = color ? 3 : 1;

    GrayImage img{static_cast<int>(width), static_cast<int>(height), {}};
    img.pixels.reserve(static_cast<std::size_t>(n_pixels));

    long rgb[3];
    for (long i = 0; i < n_pixels; ++i) {
        for (long c = 0; c < samples_per_pixel; ++c) {
            const std::size_t sample_pos = p.pos;
            const long v = binary ? p.read_binary_sample(maxval)
                                  : p.parse_uint("sample value");
            if (v > maxval) {
                throw format_error("sample value " + std::to_string(v) +
                                   " exceeds maxval " + std::to_string(maxval),
                                   sample_pos);
            }
            rgb[c] = v;
        }
        if (color) {
            img.pixels.push_back(static_cast<std::uint8_t>(
                rgb_to_gray(rescale(rgb[0], maxval), rescale(rgb[1], maxval),
                            rescale(rgb[2], maxval))));
        } else {
            img.pixels.push_back(rescale(rgb[0], maxval));
        }
    }
    return img;
}

namespace {

void write_pgm(const int width, const int height,
               const std::vector<std::uint8_t>& pixels,
               const std::string& path) {
    if (width <= 0 || height <= 0 ||
        pixels.size() != static_cast<std::size_t>(width) * height) {
        throw std::invalid_argument("image dimensions do not match pixel count");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw io_error("cannot open " + path + " for writing");
    }
    out << "P5\n" << width << ' ' << height << "\n255\n";
    out.write(reinterpret_cast<const char*>(pixels.data()),
              static_cast<std::streamsize>(pixels.size()));
    if (!out.flush()) {
        throw io_error("failed writing " + path);
    }
}

} // namespace

void write_gray(const GrayImage& img, const std::string& path) {
    write_pgm(img.width, img.height, img.pixels, path);
}

void write_binary(const BinaryImage& img, const std::string& path) {
    for (std::uint8_t v : img.pixels) {
        if (v != 0 && v != 255) {
            throw std::invalid_argument(
                "binary image contains level " + std::to_string(v) +
                ", expected only 0 or 255");
        }
    }
    write_pgm(img.width, img.height, img.pixels, path);
}

} // namespace polarity
