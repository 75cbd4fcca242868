#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "bitw/raster.hpp"

namespace bitw {

using Grid = Eigen::MatrixXd;

enum class WaveletFamily { Haar, Db2, Db4 };
enum class BoundaryMode { Symmetric, Periodic };

WaveletFamily wavelet_family_from_name(const std::string& name);
std::string to_string(WaveletFamily family);
std::string to_string(BoundaryMode mode);

// Quadrature-mirror analysis/synthesis filter pairs. The high-pass taps
// satisfy hi_d[k] = (-1)^k lo_d[L-1-k]; all supported families are
// orthonormal, so the synthesis filters equal the analysis filters.
struct FilterBank {
    std::string name;
    std::vector<double> lo_d;
    std::vector<double> hi_d;
    std::vector<double> lo_r;
    std::vector<double> hi_r;

    static FilterBank make(WaveletFamily family);
};

struct WaveletConfig {
    WaveletFamily family = WaveletFamily::Haar;
    int levels = 3;
    BoundaryMode boundary = BoundaryMode::Symmetric;
};

// One level of separable 2-D decomposition. Rows are filtered and
// decimated first, then columns:
//   a = (row-low,  col-low)    h = (row-low,  col-high)
//   v = (row-high, col-low)    d = (row-high, col-high)
struct Subbands {
    Grid a, h, v, d;
};

// Multi-level pyramid: (h, v, d) per level plus the final approximation.
// Three levels yield ten grids.
struct SubbandPyramid {
    struct Level {
        Grid h, v, d;
    };
    std::vector<Level> levels;
    Grid final_a;
    int source_rows = 0;
    int source_cols = 0;
    // Input dims of each decomposition level, needed for reconstruction.
    std::vector<std::pair<int, int>> level_dims;

    // Grids in feature order h1,v1,d1,...,hL,vL,dL,aL.
    std::vector<const Grid*> ordered_grids() const;
};

// Number of coefficients one filtering+decimation stage produces from a
// length-n signal under the given boundary policy.
int coeff_length(int n, const FilterBank& bank, BoundaryMode mode);

Subbands dwt2_single_level(const Grid& grid, const FilterBank& bank,
                           BoundaryMode mode);

// Exact inverse of dwt2_single_level (up to floating tolerance); the
// original dims must be supplied since decimation is not shape-injective.
Grid idwt2_single_level(const Subbands& sb, const FilterBank& bank,
                        BoundaryMode mode, int rows, int cols);

SubbandPyramid decompose_pyramid(const ChannelRaster& channel,
                                 const WaveletConfig& config);
SubbandPyramid decompose_pyramid(const Grid& grid, const WaveletConfig& config);

Grid reconstruct_pyramid(const SubbandPyramid& pyramid,
                         const WaveletConfig& config);

}  // namespace bitw
