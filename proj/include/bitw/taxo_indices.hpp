#pragma once

#include <array>
#include <functional>

#include "bitw/eco_indices.hpp"
#include "bitw/raster.hpp"

namespace bitw {

// Pairwise distance between gray levels. The default linear taxonomy is
// |i - j| on the quantized level axis; pluggable so a tree-based taxonomy
// can be added later.
using TaxonomicDistance = std::function<double(int, int)>;

inline double linear_level_distance(int i, int j) {
    return static_cast<double>(i > j ? i - j : j - i);
}

// Taxonomic indices over the species histogram, O(S^2). Degenerate
// inputs (S == 1) yield 0 so batch extraction stays total.
double taxonomic_diversity(const AbundanceHistogram& hist,
                           const TaxonomicDistance& dist);  // Delta
double taxonomic_distinctness(const AbundanceHistogram& hist,
                              const TaxonomicDistance& dist);  // Delta*
double sum_phylogenetic_distances(const AbundanceHistogram& hist,
                                  const TaxonomicDistance& dist);  // s_PD
double nearest_neighbor_distance(const AbundanceHistogram& hist,
                                 const TaxonomicDistance& dist);  // d_NN
double extensive_quadratic_entropy(const AbundanceHistogram& hist,
                                   const TaxonomicDistance& dist);  // e_EQ
double intensive_quadratic_entropy(const AbundanceHistogram& hist,
                                   const TaxonomicDistance& dist);  // e_IQ
double total_taxonomic_distinctness(const AbundanceHistogram& hist,
                                    const TaxonomicDistance& dist);  // d_TT

inline constexpr std::array<const char*, 9> kTaxonomicFeatureNames = {
    "delta", "delta_star", "s_PD", "d_NN", "e_EQ",
    "e_IQ",  "d_TT",       "H",    "I_total"};

// The per-subband 9-vector [Delta, Delta*, s_PD, d_NN, e_EQ, e_IQ, d_TT,
// H, I_total] for a quantized grid.
std::array<double, 9> taxonomic_vector(const ChannelRaster& quantized,
                                       const TaxonomicDistance& dist = linear_level_distance);

}  // namespace bitw
