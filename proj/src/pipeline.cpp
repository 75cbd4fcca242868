#include "bitw/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "bitw/eco_indices.hpp"
#include "bitw/errors.hpp"
#include "bitw/taxo_indices.hpp"

namespace bitw {

namespace {

// Lexicographic comparison of the sorted value multiset against its
// negation. Used to break the one tie the affine map cannot place
// symmetrically: the exact midpoint of the range when the bin count is
// even. Depends only on the value multiset, so spatial flips of the
// grid cannot change the outcome, and negating the grid flips it.
bool leans_nonnegative(const Grid& grid) {
    std::vector<double> v(grid.data(), grid.data() + grid.size());
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    for (size_t i = 0; i < n; ++i) {
        const double mirrored = -v[n - 1 - i];
        if (v[i] != mirrored) return v[i] > mirrored;
    }
    return true;  // sign-symmetric multiset; either choice is consistent
}

}  // namespace

QuantizedSubband quantize_subband(const Grid& grid, int bins) {
    if (bins < 2) {
        throw Error("quantization needs at least 2 bins");
    }
    QuantizedSubband out;
    out.levels.rows = static_cast<int>(grid.rows());
    out.levels.cols = static_cast<int>(grid.cols());
    out.levels.gray_levels = bins;
    out.levels.values.resize(grid.size());

    if (!grid.allFinite()) {
        throw NonFiniteCoefficientError("subband contains NaN or infinity");
    }
    out.min_c = grid.minCoeff();
    out.max_c = grid.maxCoeff();
    const double range = out.max_c - out.min_c;
    if (range == 0.0) {
        return out;  // constant source maps to all zeros
    }
    // Affine map to [0, bins-1] written in a form that is exactly
    // antisymmetric about the range midpoint: negating the grid (which
    // swaps and negates min/max) sends every level to bins-1-level,
    // bit for bit. Plain llround((c-min)*scale) breaks that promise at
    // bin boundaries, where the two orientations resolve the rounding
    // from opposite sides.
    //
    // s = ((c-min)-(max-c))/range lies in [-1, 1] and negates exactly
    // under grid negation. With T = (bins-1)*s the level is the nearest
    // integer to ((bins-1)+T)/2; boundary ties (T integer with the
    // right parity) round away from the center, and the unpairable
    // exact-center tie falls back to a multiset sign statistic.
    std::optional<bool> nonneg;  // computed only when a center tie occurs
    const long long top = bins - 1;
    size_t idx = 0;
    for (int r = 0; r < out.levels.rows; ++r) {
        for (int c = 0; c < out.levels.cols; ++c) {
            const double lo = grid(r, c) - out.min_c;
            const double hi = out.max_c - grid(r, c);
            const double s = (lo - hi) / range;
            const double t = static_cast<double>(top) * s;
            const double m = std::floor(t);
            const long long base = top + static_cast<long long>(m);
            long long level;
            if (t == m) {                 // on a half-level lattice point
                if (base % 2 == 0) {      // lands exactly on a level
                    level = base / 2;
                } else if (t > 0.0) {     // boundary tie above center
                    level = (base + 1) / 2;
                } else if (t < 0.0) {     // boundary tie below center
                    level = (base - 1) / 2;
                } else {                  // exact center, even bin count
                    if (!nonneg) nonneg = leans_nonnegative(grid);
                    level = *nonneg ? (base + 1) / 2 : (base - 1) / 2;
                }
            } else {
                level = base % 2 == 0 ? base / 2 : (base + 1) / 2;
            }
            out.levels.values[idx++] =
                static_cast<int>(std::clamp<long long>(level, 0, top));
        }
    }
    return out;
}

int feature_count(int levels) {
    return 27 + 27 * (3 * levels + 1);
}

namespace {

constexpr const char* kChannelNames[3] = {"R", "G", "B"};

std::vector<std::string> subband_names(int levels) {
    std::vector<std::string> names;
    for (int q = 1; q <= levels; ++q) {
        names.push_back("h" + std::to_string(q));
        names.push_back("v" + std::to_string(q));
        names.push_back("d" + std::to_string(q));
    }
    names.push_back("a" + std::to_string(levels));
    return names;
}

}  // namespace

std::vector<std::string> feature_names(int levels) {
    std::vector<std::string> names;
    names.reserve(feature_count(levels));
    for (const char* ch : kChannelNames) {
        for (const char* f : kBiodiversityFeatureNames) {
            names.push_back(std::string("bio.") + ch + "." + f);
        }
    }
    const auto subbands = subband_names(levels);
    for (const char* ch : kChannelNames) {
        for (const auto& sb : subbands) {
            for (const char* f : kTaxonomicFeatureNames) {
                names.push_back(std::string("taxo.") + ch + "." + sb + "." + f);
            }
        }
    }
    return names;
}

FeatureVector extract_bitw(const ImageSample& sample,
                           const DescriptorConfig& config) {
    const auto channels = split_channels(sample);

    FeatureVector fv;
    fv.values.reserve(feature_count(config.wavelet.levels));
    fv.names = feature_names(config.wavelet.levels);

    // Biodiversity block: raw channels only, never subbands.
    for (const auto& channel : channels) {
        const auto bio = biodiversity_vector(channel);
        fv.values.insert(fv.values.end(), bio.begin(), bio.end());
    }

    // Taxonomic block: quantized wavelet subbands per channel.
    for (const auto& channel : channels) {
        const SubbandPyramid pyramid = decompose_pyramid(channel, config.wavelet);
        for (const Grid* grid : pyramid.ordered_grids()) {
            const QuantizedSubband q = quantize_subband(*grid, config.quant_bins);
            const auto taxo = taxonomic_vector(q.levels);
            fv.values.insert(fv.values.end(), taxo.begin(), taxo.end());
        }
    }
    return fv;
}

}  // namespace bitw
