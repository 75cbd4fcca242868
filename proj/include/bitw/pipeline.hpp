#pragma once

#include <string>
#include <vector>

#include "bitw/raster.hpp"
#include "bitw/wavelet.hpp"

namespace bitw {

// Subband coefficients mapped to integer levels in [0, Q-1] by a
// per-subband min-max affine map; a constant source maps to all zeros.
struct QuantizedSubband {
    ChannelRaster levels;
    double min_c = 0.0;
    double max_c = 0.0;
};

QuantizedSubband quantize_subband(const Grid& grid, int bins = 256);

// The 297-dimensional BiTW descriptor (for levels = 3):
//   [bio R(9), bio G(9), bio B(9)] then per channel R,G,B, per subband
//   h1,v1,d1,...,hL,vL,dL,aL, the taxonomic 9-vector.
struct FeatureVector {
    std::vector<double> values;
    std::vector<std::string> names;
};

struct DescriptorConfig {
    WaveletConfig wavelet;
    int quant_bins = 256;
};

// 27 + 27*(3*levels + 1); 297 for three levels.
int feature_count(int levels);

std::vector<std::string> feature_names(int levels);

FeatureVector extract_bitw(const ImageSample& sample,
                           const DescriptorConfig& config = {});

}  // namespace bitw
