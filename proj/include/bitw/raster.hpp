#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace bitw {

// One color channel as an integer grid; values lie in [0, gray_levels-1].
// In the ecosystem reading, pixels are individuals and gray levels species.
struct ChannelRaster {
    int rows = 0;
    int cols = 0;
    int gray_levels = 256;
    std::vector<int> values;  // row-major, rows*cols entries

    int at(int r, int c) const { return values[static_cast<size_t>(r) * cols + c]; }
    int& at(int r, int c) { return values[static_cast<size_t>(r) * cols + c]; }
    size_t pixel_count() const { return values.size(); }
};

// Decoded 8-bit RGB image. Grayscale sources are replicated to three
// identical channels; alpha is dropped at decode time.
struct ImageSample {
    std::filesystem::path path;
    std::string label;
    int rows = 0;
    int cols = 0;
    std::vector<uint8_t> pixels;  // row-major, interleaved R,G,B

    uint8_t at(int r, int c, int ch) const {
        return pixels[(static_cast<size_t>(r) * cols + c) * 3 + ch];
    }
};

constexpr int kMinImageDim = 8;  // must survive 3 dyadic halvings

// Decodes a PNG/TIFF/JPEG file. Throws DecodeError for unreadable or
// corrupt files and TooSmallError when either dimension is below 8.
ImageSample load_image(const std::filesystem::path& path);

// Builds an ImageSample from an in-memory interleaved RGB buffer.
ImageSample make_sample(int rows, int cols, std::vector<uint8_t> rgb,
                        std::string label = {});

// Splits an image into its R, G, B planes with Q = 256.
std::array<ChannelRaster, 3> split_channels(const ImageSample& sample);

// Inverse of split_channels; used by round-trip checks.
ImageSample recombine_channels(const ChannelRaster& r, const ChannelRaster& g,
                               const ChannelRaster& b);

}  // namespace bitw
