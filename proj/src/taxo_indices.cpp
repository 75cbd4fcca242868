#include "bitw/taxo_indices.hpp"

#include <limits>
#include <vector>

#include "bitw/errors.hpp"

namespace bitw {

namespace {

struct Species {
    int level;
    double abundance;
};

std::vector<Species> species_of(const AbundanceHistogram& hist) {
    std::vector<Species> out;
    out.reserve(hist.counts.size());
    for (const auto& [level, count] : hist.counts) {
        out.push_back({level, static_cast<double>(count)});
    }
    return out;
}

// Shared numerator/denominators of Eqs. for Delta and Delta*:
// sums over unordered species pairs of w_ij x_i x_j and x_i x_j.
struct PairSums {
    double weighted = 0.0;  // sum d_ij x_i x_j
    double plain = 0.0;     // sum x_i x_j
};

PairSums pair_sums(const std::vector<Species>& sp, const TaxonomicDistance& dist) {
    PairSums sums;
    for (size_t i = 0; i < sp.size(); ++i) {
        for (size_t j = i + 1; j < sp.size(); ++j) {
            const double cross = sp[i].abundance * sp[j].abundance;
            sums.weighted += dist(sp[i].level, sp[j].level) * cross;
            sums.plain += cross;
        }
    }
    return sums;
}

}  // namespace

double taxonomic_diversity(const AbundanceHistogram& hist,
                           const TaxonomicDistance& dist) {
    if (hist.total < 2) {
        throw UndefinedForSinglePixelError("taxonomic diversity needs N >= 2");
    }
    const auto sp = species_of(hist);
    const double n = static_cast<double>(hist.total);
    return pair_sums(sp, dist).weighted / (n * (n - 1.0) / 2.0);
}

double taxonomic_distinctness(const AbundanceHistogram& hist,
                              const TaxonomicDistance& dist) {
    if (hist.richness() < 2) return 0.0;
    const auto sums = pair_sums(species_of(hist), dist);
    return sums.weighted / sums.plain;
}

double sum_phylogenetic_distances(const AbundanceHistogram& hist,
                                  const TaxonomicDistance& dist) {
    const double s = static_cast<double>(hist.richness());
    if (s < 2) return 0.0;
    return (s * (s - 1.0) / 2.0) * taxonomic_distinctness(hist, dist);
}

double nearest_neighbor_distance(const AbundanceHistogram& hist,
                                 const TaxonomicDistance& dist) {
    const auto sp = species_of(hist);
    if (sp.size() < 2) return 0.0;
    double total = 0.0;
    for (size_t i = 0; i < sp.size(); ++i) {
        double nearest = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < sp.size(); ++j) {
            if (j == i) continue;
            nearest = std::min(nearest, dist(sp[i].level, sp[j].level));
        }
        total += nearest;
    }
    return total;
}

double extensive_quadratic_entropy(const AbundanceHistogram& hist,
                                   const TaxonomicDistance& dist) {
    const auto sp = species_of(hist);
    double total = 0.0;
    for (size_t i = 0; i < sp.size(); ++i) {
        for (size_t j = i + 1; j < sp.size(); ++j) {
            total += 2.0 * dist(sp[i].level, sp[j].level);  // ordered pairs
        }
    }
    return total;
}

double intensive_quadratic_entropy(const AbundanceHistogram& hist,
                                   const TaxonomicDistance& dist) {
    const double s = static_cast<double>(hist.richness());
    if (s < 1) return 0.0;
    return extensive_quadratic_entropy(hist, dist) / (s * s);
}

double total_taxonomic_distinctness(const AbundanceHistogram& hist,
                                    const TaxonomicDistance& dist) {
    const auto sp = species_of(hist);
    if (sp.size() < 2) return 0.0;
    const double s = static_cast<double>(sp.size());
    double total = 0.0;
    for (size_t i = 0; i < sp.size(); ++i) {
        double row = 0.0;
        for (size_t j = 0; j < sp.size(); ++j) {
            if (j != i) row += dist(sp[i].level, sp[j].level);
        }
        total += row / (s - 1.0);
    }
    return total;
}

std::array<double, 9> taxonomic_vector(const ChannelRaster& quantized,
                                       const TaxonomicDistance& dist) {
    const AbundanceHistogram hist = histogram(quantized);
    if (hist.total < 2 || hist.richness() < 2) {
        // Degenerate subbands contribute an all-zero block.
        if (hist.richness() < 2) return {0, 0, 0, 0, 0, 0, 0, 0, 0};
    }
    const double h = shannon_wiener(hist);
    return {hist.total < 2 ? 0.0 : taxonomic_diversity(hist, dist),
            taxonomic_distinctness(hist, dist),
            sum_phylogenetic_distances(hist, dist),
            nearest_neighbor_distance(hist, dist),
            extensive_quadratic_entropy(hist, dist),
            intensive_quadratic_entropy(hist, dist),
            total_taxonomic_distinctness(hist, dist),
            h,
            total_information(hist)};
}

}  // namespace bitw
