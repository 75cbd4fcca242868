#include "bitw/raster.hpp"

#include <opencv2/imgcodecs.hpp>

#include "bitw/errors.hpp"

namespace bitw {

ImageSample load_image(const std::filesystem::path& path) {
    // IMREAD_COLOR yields 3-channel BGR: alpha is dropped and grayscale
    // sources are replicated across the three planes.
    cv::Mat bgr = cv::imread(path.string(), cv::IMREAD_COLOR);
    if (bgr.empty()) {
        throw DecodeError("cannot decode image: " + path.string());
    }
    if (bgr.rows < kMinImageDim || bgr.cols < kMinImageDim) {
        throw TooSmallError("image " + path.string() + " is " +
                            std::to_string(bgr.rows) + "x" + std::to_string(bgr.cols) +
                            "; minimum is " + std::to_string(kMinImageDim));
    }

    ImageSample sample;
    sample.path = path;
    sample.rows = bgr.rows;
    sample.cols = bgr.cols;
    sample.pixels.resize(static_cast<size_t>(bgr.rows) * bgr.cols * 3);
    for (int r = 0; r < bgr.rows; ++r) {
        const auto* row = bgr.ptr<cv::Vec3b>(r);
        for (int c = 0; c < bgr.cols; ++c) {
            size_t base = (static_cast<size_t>(r) * bgr.cols + c) * 3;
            sample.pixels[base + 0] = row[c][2];
            sample.pixels[base + 1] = row[c][1];
            sample.pixels[base + 2] = row[c][0];
        }
    }
    return sample;
}

ImageSample make_sample(int rows, int cols, std::vector<uint8_t> rgb,
                        std::string label) {
    if (rows < kMinImageDim || cols < kMinImageDim) {
        throw TooSmallError("sample is " + std::to_string(rows) + "x" +
                            std::to_string(cols));
    }
    if (rgb.size() != static_cast<size_t>(rows) * cols * 3) {
        throw ShapeMismatchError("rgb buffer size does not match dims");
    }
    ImageSample sample;
    sample.label = std::move(label);
    sample.rows = rows;
    sample.cols = cols;
    sample.pixels = std::move(rgb);
    return sample;
}

std::array<ChannelRaster, 3> split_channels(const ImageSample& sample) {
    std::array<ChannelRaster, 3> planes;
    for (int ch = 0; ch < 3; ++ch) {
        auto& plane = planes[ch];
        plane.rows = sample.rows;
        plane.cols = sample.cols;
        plane.gray_levels = 256;
        plane.values.resize(static_cast<size_t>(sample.rows) * sample.cols);
        for (size_t i = 0; i < plane.values.size(); ++i) {
            plane.values[i] = sample.pixels[i * 3 + ch];
        }
    }
    return planes;
}

ImageSample recombine_channels(const ChannelRaster& r, const ChannelRaster& g,
                               const ChannelRaster& b) {
    if (g.rows != r.rows || g.cols != r.cols || b.rows != r.rows ||
        b.cols != r.cols) {
        throw ShapeMismatchError("channel planes have differing dims");
    }
    ImageSample sample;
    sample.rows = r.rows;
    sample.cols = r.cols;
    sample.pixels.resize(static_cast<size_t>(r.rows) * r.cols * 3);
    for (size_t i = 0; i < r.values.size(); ++i) {
        sample.pixels[i * 3 + 0] = static_cast<uint8_t>(r.values[i]);
        sample.pixels[i * 3 + 1] = static_cast<uint8_t>(g.values[i]);
        sample.pixels[i * 3 + 2] = static_cast<uint8_t>(b.values[i]);
    }
    return sample;
}

}  // namespace bitw
