#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bitw/eco_indices.hpp"
#include "bitw/pipeline.hpp"
#include "bitw/raster.hpp"
#include "bitw/taxo_indices.hpp"
#include "bitw/wavelet.hpp"

namespace py = pybind11;
using namespace bitw;

namespace {

DescriptorConfig make_config(const std::string& wavelet, int levels,
                             const std::string& boundary, int bins) {
    DescriptorConfig cfg;
    cfg.wavelet.family = wavelet_family_from_name(wavelet);
    cfg.wavelet.levels = levels;
    if (boundary == "symmetric") {
        cfg.wavelet.boundary = BoundaryMode::Symmetric;
    } else if (boundary == "periodic") {
        cfg.wavelet.boundary = BoundaryMode::Periodic;
    } else {
        throw py::value_error("boundary must be 'symmetric' or 'periodic'");
    }
    cfg.quant_bins = bins;
    return cfg;
}

ImageSample sample_from_array(py::array_t<uint8_t, py::array::c_style> image) {
    const auto info = image.request();
    if (info.ndim != 3 || info.shape[2] != 3) {
        throw py::value_error("image must be an HxWx3 uint8 array");
    }
    const int rows = static_cast<int>(info.shape[0]);
    const int cols = static_cast<int>(info.shape[1]);
    const auto* data = static_cast<const uint8_t*>(info.ptr);
    std::vector<uint8_t> rgb(data, data + static_cast<size_t>(rows) * cols * 3);
    return make_sample(rows, cols, std::move(rgb));
}

ChannelRaster raster_from_array(py::array_t<int, py::array::c_style> grid,
                                int gray_levels) {
    const auto info = grid.request();
    if (info.ndim != 2) {
        throw py::value_error("grid must be a 2-D integer array");
    }
    ChannelRaster raster;
    raster.rows = static_cast<int>(info.shape[0]);
    raster.cols = static_cast<int>(info.shape[1]);
    raster.gray_levels = gray_levels;
    const auto* data = static_cast<const int*>(info.ptr);
    raster.values.assign(data, data + static_cast<size_t>(raster.rows) * raster.cols);
    return raster;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "BiTW texture descriptor: ecological diversity indices over "
              "color channels and wavelet subbands";

    m.def(
        "extract",
        [](py::array_t<uint8_t, py::array::c_style> image,
           const std::string& wavelet, int levels, const std::string& boundary,
           int bins) {
            const FeatureVector fv = extract_bitw(
                sample_from_array(std::move(image)),
                make_config(wavelet, levels, boundary, bins));
            return py::make_tuple(fv.names, fv.values);
        },
        py::arg("image"), py::arg("wavelet") = "haar", py::arg("levels") = 3,
        py::arg("boundary") = "symmetric", py::arg("bins") = 256,
        "Extract the BiTW descriptor from an HxWx3 uint8 image; returns "
        "(names, values).");

    m.def("feature_names", &feature_names, py::arg("levels") = 3);
    m.def("feature_count", &feature_count, py::arg("levels") = 3);

    m.def(
        "biodiversity_vector",
        [](py::array_t<int, py::array::c_style> grid) {
            const auto v = biodiversity_vector(raster_from_array(std::move(grid), 256));
            return std::vector<double>(v.begin(), v.end());
        },
        py::arg("grid"),
        "Nine biodiversity indices of an integer gray-level grid.");

    m.def(
        "taxonomic_vector",
        [](py::array_t<int, py::array::c_style> grid, int gray_levels) {
            const auto v =
                taxonomic_vector(raster_from_array(std::move(grid), gray_levels));
            return std::vector<double>(v.begin(), v.end());
        },
        py::arg("grid"), py::arg("gray_levels") = 256,
        "Nine taxonomic indices of a quantized grid.");

    m.def(
        "dwt2",
        [](const Grid& grid, const std::string& wavelet,
           const std::string& boundary) {
            const auto cfg = make_config(wavelet, 1, boundary, 256);
            const FilterBank bank = FilterBank::make(cfg.wavelet.family);
            const Subbands sb = dwt2_single_level(grid, bank, cfg.wavelet.boundary);
            return py::make_tuple(sb.a, sb.h, sb.v, sb.d);
        },
        py::arg("grid"), py::arg("wavelet") = "haar",
        py::arg("boundary") = "symmetric",
        "One level of separable 2-D DWT; returns (a, h, v, d).");

    m.def(
        "idwt2",
        [](const Grid& a, const Grid& h, const Grid& v, const Grid& d, int rows,
           int cols, const std::string& wavelet, const std::string& boundary) {
            const auto cfg = make_config(wavelet, 1, boundary, 256);
            const FilterBank bank = FilterBank::make(cfg.wavelet.family);
            return idwt2_single_level({a, h, v, d}, bank, cfg.wavelet.boundary,
                                      rows, cols);
        },
        py::arg("a"), py::arg("h"), py::arg("v"), py::arg("d"), py::arg("rows"),
        py::arg("cols"), py::arg("wavelet") = "haar",
        py::arg("boundary") = "symmetric",
        "Inverse of dwt2 for the given original dims.");

    m.def(
        "quantize",
        [](const Grid& grid, int bins) {
            const QuantizedSubband q = quantize_subband(grid, bins);
            py::array_t<int> out({q.levels.rows, q.levels.cols});
            std::copy(q.levels.values.begin(), q.levels.values.end(),
                      out.mutable_data());
            return py::make_tuple(out, q.min_c, q.max_c);
        },
        py::arg("grid"), py::arg("bins") = 256,
        "Min-max quantization of a real grid; returns (levels, min, max).");
}
