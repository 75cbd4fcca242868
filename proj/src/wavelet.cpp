#include "bitw/wavelet.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "bitw/errors.hpp"

namespace bitw {

namespace {

// Classical orthonormal Daubechies analysis low-pass taps.
const std::vector<double> kHaarLo = {0.7071067811865476, 0.7071067811865476};

const std::vector<double> kDb2Lo = {
    0.48296291314469025, 0.8365163037378079,
    0.22414386804185735, -0.12940952255092145};

const std::vector<double> kDb4Lo = {
    0.23037781330885523,  0.7148465705525415,   0.6308807679295904,
    -0.02798376941698385, -0.18703481171888114, 0.030841381835986965,
    0.032883011666982945, -0.010597401784997278};

// Whole-sample symmetric reflection of index j into [0, n).
int reflect_index(int j, int n) {
    if (n == 1) return 0;
    const int period = 2 * (n - 1);
    j %= period;
    if (j < 0) j += period;
    return j < n ? j : period - j;
}

// One filtering+decimation stage along a vector, even-indexed outputs.
// Periodic mode pads odd lengths by repeating the last sample, which
// keeps the transform orthogonal (even length, dyadic shifts).
Eigen::VectorXd analyze_1d(const Eigen::VectorXd& x,
                           const std::vector<double>& taps, BoundaryMode mode) {
    const int n = static_cast<int>(x.size());
    const int len = static_cast<int>(taps.size());
    if (mode == BoundaryMode::Periodic) {
        const int m = n + (n % 2);  // padded length
        const int nc = m / 2;
        Eigen::VectorXd out(nc);
        for (int k = 0; k < nc; ++k) {
            double acc = 0.0;
            for (int t = 0; t < len; ++t) {
                int j = (2 * k + t) % m;
                acc += taps[t] * x[j < n ? j : n - 1];
            }
            out[k] = acc;
        }
        return out;
    }
    const int nc = (n + len - 1) / 2;
    const int phase = len - 2;  // aligns the Haar case with x[2k], x[2k+1]
    Eigen::VectorXd out(nc);
    for (int k = 0; k < nc; ++k) {
        double acc = 0.0;
        for (int t = 0; t < len; ++t) {
            acc += taps[t] * x[reflect_index(2 * k - phase + t, n)];
        }
        out[k] = acc;
    }
    return out;
}

struct Analyzed {
    Eigen::VectorXd lo;
    Eigen::VectorXd hi;
};

Analyzed analyze_pair(const Eigen::VectorXd& x, const FilterBank& bank,
                      BoundaryMode mode) {
    return {analyze_1d(x, bank.lo_d, mode), analyze_1d(x, bank.hi_d, mode)};
}

// The 1-D inverse is the least-squares solve against the forward map,
// which is exact because the forward stage never discards information
// (periodic even-length transforms are orthogonal; symmetric mode is
// expansive). Decompositions are cached per (filter, mode, length).
class InverseSolver {
public:
    static const InverseSolver& get(const FilterBank& bank, BoundaryMode mode,
                                    int n) {
        static std::mutex mu;
        static std::map<std::tuple<std::string, BoundaryMode, int>,
                        std::unique_ptr<InverseSolver>>
            cache;
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_tuple(bank.name, mode, n);
        auto it = cache.find(key);
        if (it == cache.end()) {
            it = cache.emplace(key, std::unique_ptr<InverseSolver>(
                                        new InverseSolver(bank, mode, n)))
                     .first;
        }
        return *it->second;
    }

    Eigen::VectorXd invert(const Eigen::VectorXd& lo,
                           const Eigen::VectorXd& hi) const {
        Eigen::VectorXd coeffs(lo.size() + hi.size());
        coeffs << lo, hi;
        return qr_.solve(coeffs);
    }

    int coeff_len() const { return nc_; }

private:
    InverseSolver(const FilterBank& bank, BoundaryMode mode, int n) {
        nc_ = coeff_length(n, bank, mode);
        Eigen::MatrixXd forward(2 * nc_, n);
        Eigen::VectorXd basis = Eigen::VectorXd::Zero(n);
        for (int j = 0; j < n; ++j) {
            basis[j] = 1.0;
            Analyzed a = analyze_pair(basis, bank, mode);
            forward.block(0, j, nc_, 1) = a.lo;
            forward.block(nc_, j, nc_, 1) = a.hi;
            basis[j] = 0.0;
        }
        qr_.compute(forward);
    }

    int nc_ = 0;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr_;
};

Grid raster_to_grid(const ChannelRaster& channel) {
    Grid grid(channel.rows, channel.cols);
    for (int r = 0; r < channel.rows; ++r) {
        for (int c = 0; c < channel.cols; ++c) {
            grid(r, c) = static_cast<double>(channel.at(r, c));
        }
    }
    return grid;
}

}  // namespace

WaveletFamily wavelet_family_from_name(const std::string& name) {
    if (name == "haar" || name == "db1") return WaveletFamily::Haar;
    if (name == "db2") return WaveletFamily::Db2;
    if (name == "db4") return WaveletFamily::Db4;
    throw Error("unknown wavelet family: " + name);
}

std::string to_string(WaveletFamily family) {
    switch (family) {
        case WaveletFamily::Haar: return "haar";
        case WaveletFamily::Db2: return "db2";
        case WaveletFamily::Db4: return "db4";
    }
    return "?";
}

std::string to_string(BoundaryMode mode) {
    return mode == BoundaryMode::Symmetric ? "symmetric" : "periodic";
}

FilterBank FilterBank::make(WaveletFamily family) {
    FilterBank bank;
    bank.name = to_string(family);
    switch (family) {
        case WaveletFamily::Haar: bank.lo_d = kHaarLo; break;
        case WaveletFamily::Db2: bank.lo_d = kDb2Lo; break;
        case WaveletFamily::Db4: bank.lo_d = kDb4Lo; break;
    }
    const int len = static_cast<int>(bank.lo_d.size());
    bank.hi_d.resize(len);
    for (int k = 0; k < len; ++k) {
        bank.hi_d[k] = (k % 2 == 0 ? 1.0 : -1.0) * bank.lo_d[len - 1 - k];
    }
    bank.lo_r = bank.lo_d;  // orthonormal
    bank.hi_r = bank.hi_d;
    return bank;
}

int coeff_length(int n, const FilterBank& bank, BoundaryMode mode) {
    if (mode == BoundaryMode::Periodic) return (n + 1) / 2;
    return (n + static_cast<int>(bank.lo_d.size()) - 1) / 2;
}

std::vector<const Grid*> SubbandPyramid::ordered_grids() const {
    std::vector<const Grid*> grids;
    for (const auto& level : levels) {
        grids.push_back(&level.h);
        grids.push_back(&level.v);
        grids.push_back(&level.d);
    }
    grids.push_back(&final_a);
    return grids;
}

Subbands dwt2_single_level(const Grid& grid, const FilterBank& bank,
                           BoundaryMode mode) {
    const int rows = static_cast<int>(grid.rows());
    const int cols = static_cast<int>(grid.cols());
    if (rows < 2 || cols < 2) {
        throw DegenerateGridError("grid is " + std::to_string(rows) + "x" +
                                  std::to_string(cols) + "; need at least 2x2");
    }

    // Stage 1: each row, horizontally.
    const int ncc = coeff_length(cols, bank, mode);
    Grid row_lo(rows, ncc), row_hi(rows, ncc);
    for (int r = 0; r < rows; ++r) {
        Analyzed a = analyze_pair(grid.row(r).transpose(), bank, mode);
        row_lo.row(r) = a.lo.transpose();
        row_hi.row(r) = a.hi.transpose();
    }

    // Stage 2: each column.
    const int ncr = coeff_length(rows, bank, mode);
    Subbands sb;
    sb.a.resize(ncr, ncc);
    sb.h.resize(ncr, ncc);
    sb.v.resize(ncr, ncc);
    sb.d.resize(ncr, ncc);
    for (int c = 0; c < ncc; ++c) {
        Analyzed lo = analyze_pair(row_lo.col(c), bank, mode);
        sb.a.col(c) = lo.lo;
        sb.h.col(c) = lo.hi;
        Analyzed hi = analyze_pair(row_hi.col(c), bank, mode);
        sb.v.col(c) = hi.lo;
        sb.d.col(c) = hi.hi;
    }
    return sb;
}

Grid idwt2_single_level(const Subbands& sb, const FilterBank& bank,
                        BoundaryMode mode, int rows, int cols) {
    const auto dims_of = [](const Grid& g) {
        return std::make_pair(static_cast<int>(g.rows()),
                              static_cast<int>(g.cols()));
    };
    if (dims_of(sb.h) != dims_of(sb.a) || dims_of(sb.v) != dims_of(sb.a) ||
        dims_of(sb.d) != dims_of(sb.a)) {
        throw ShapeMismatchError("subband grids have differing dims");
    }
    const int ncr = coeff_length(rows, bank, mode);
    const int ncc = coeff_length(cols, bank, mode);
    if (sb.a.rows() != ncr || sb.a.cols() != ncc) {
        throw ShapeMismatchError("subband dims do not match target dims");
    }

    const auto& col_solver = InverseSolver::get(bank, mode, rows);
    Grid row_lo(rows, ncc), row_hi(rows, ncc);
    for (int c = 0; c < ncc; ++c) {
        row_lo.col(c) = col_solver.invert(sb.a.col(c), sb.h.col(c));
        row_hi.col(c) = col_solver.invert(sb.v.col(c), sb.d.col(c));
    }

    const auto& row_solver = InverseSolver::get(bank, mode, cols);
    Grid out(rows, cols);
    for (int r = 0; r < rows; ++r) {
        out.row(r) = row_solver
                         .invert(row_lo.row(r).transpose(),
                                 row_hi.row(r).transpose())
                         .transpose();
    }
    return out;
}

SubbandPyramid decompose_pyramid(const Grid& grid, const WaveletConfig& config) {
    if (config.levels < 1) {
        throw Error("levels must be >= 1");
    }
    const FilterBank bank = FilterBank::make(config.family);
    SubbandPyramid pyramid;
    pyramid.source_rows = static_cast<int>(grid.rows());
    pyramid.source_cols = static_cast<int>(grid.cols());

    Grid current = grid;
    for (int level = 0; level < config.levels; ++level) {
        if (current.rows() < 2 || current.cols() < 2) {
            throw TooShallowError("grid of " + std::to_string(pyramid.source_rows) +
                                  "x" + std::to_string(pyramid.source_cols) +
                                  " cannot support " +
                                  std::to_string(config.levels) + " levels");
        }
        pyramid.level_dims.emplace_back(static_cast<int>(current.rows()),
                                        static_cast<int>(current.cols()));
        Subbands sb = dwt2_single_level(current, bank, config.boundary);
        pyramid.levels.push_back({std::move(sb.h), std::move(sb.v), std::move(sb.d)});
        current = std::move(sb.a);
    }
    pyramid.final_a = std::move(current);
    return pyramid;
}

SubbandPyramid decompose_pyramid(const ChannelRaster& channel,
                                 const WaveletConfig& config) {
    return decompose_pyramid(raster_to_grid(channel), config);
}

Grid reconstruct_pyramid(const SubbandPyramid& pyramid,
                         const WaveletConfig& config) {
    const FilterBank bank = FilterBank::make(config.family);
    Grid current = pyramid.final_a;
    for (int level = static_cast<int>(pyramid.levels.size()) - 1; level >= 0;
         --level) {
        const auto& [rows, cols] = pyramid.level_dims[level];
        Subbands sb{std::move(current), pyramid.levels[level].h,
                    pyramid.levels[level].v, pyramid.levels[level].d};
        current = idwt2_single_level(sb, bank, config.boundary, rows, cols);
    }
    return current;
}

}  // namespace bitw
