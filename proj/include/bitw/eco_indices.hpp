#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "bitw/raster.hpp"

namespace bitw {

// Species-abundance view of a channel: species are distinct gray levels,
// abundances their pixel counts.
struct AbundanceHistogram {
    std::map<int, int64_t> counts;  // gray level -> n_i, every n_i >= 1
    int64_t total = 0;              // N = sum of abundances

    int64_t richness() const { return static_cast<int64_t>(counts.size()); }  // S
    int64_t max_abundance() const;                                            // N_max
};

AbundanceHistogram histogram(const ChannelRaster& channel);

// Biodiversity indices over the abundance histogram. Logs are natural.
double margalef(const AbundanceHistogram& hist);        // (S-1)/ln N
double menhinick(const AbundanceHistogram& hist);       // S/N
double shannon_wiener(const AbundanceHistogram& hist);  // -sum p_i ln p_i
double mcintosh(const AbundanceHistogram& hist);
double berger_parker(const AbundanceHistogram& hist);   // N_max/N

// Root of S = alpha ln(1 + N/alpha), residual <= 1e-8.
// Degenerate rules: S == 1 -> 0; S == N -> 1e6 cap.
double fisher_alpha(const AbundanceHistogram& hist);
double fisher_alpha(int64_t richness, int64_t total);
constexpr double kFisherAlphaCap = 1e6;

// Interquartile slope of the cumulative abundance curve (Q statistic).
// Species are ranked by increasing abundance; degenerate cases (S < 4 or
// equal quartile abundances) return 0.
double kempton_taylor(const AbundanceHistogram& hist);

double total_information(const AbundanceHistogram& hist);  // N * H, nats

inline constexpr std::array<const char*, 9> kBiodiversityFeatureNames = {
    "d_Mg", "d_Mn", "d_SW", "e_M", "d_BP", "d_F", "d_KT", "H", "I_total"};

// The per-channel 9-vector in the fixed order above.
std::array<double, 9> biodiversity_vector(const ChannelRaster& channel);

}  // namespace bitw
