#include "bitw/eco_indices.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "bitw/errors.hpp"

namespace bitw {

int64_t AbundanceHistogram::max_abundance() const {
    int64_t best = 0;
    for (const auto& [level, n] : counts) best = std::max(best, n);
    return best;
}

AbundanceHistogram histogram(const ChannelRaster& channel) {
    AbundanceHistogram hist;
    for (int v : channel.values) {
        ++hist.counts[v];
    }
    hist.total = static_cast<int64_t>(channel.values.size());
    return hist;
}

double margalef(const AbundanceHistogram& hist) {
    if (hist.total < 2) {
        throw UndefinedForSinglePixelError("margalef needs N >= 2");
    }
    return static_cast<double>(hist.richness() - 1) /
           std::log(static_cast<double>(hist.total));
}

double menhinick(const AbundanceHistogram& hist) {
    // S/N as printed; the classical form divides by sqrt(N) instead.
    return static_cast<double>(hist.richness()) /
           static_cast<double>(hist.total);
}

double shannon_wiener(const AbundanceHistogram& hist) {
    double h = 0.0;
    const double n = static_cast<double>(hist.total);
    for (const auto& [level, count] : hist.counts) {
        const double p = static_cast<double>(count) / n;
        h -= p * std::log(p);
    }
    return h;
}

double mcintosh(const AbundanceHistogram& hist) {
    double sum_sq = 0.0;
    for (const auto& [level, count] : hist.counts) {
        sum_sq += static_cast<double>(count) * static_cast<double>(count);
    }
    const double n = static_cast<double>(hist.total);
    const double s = static_cast<double>(hist.richness());
    const double denom = (n - s + 1.0) * (n - s + 1.0) + s - 1.0;
    return std::sqrt(sum_sq / denom);
}

double berger_parker(const AbundanceHistogram& hist) {
    return static_cast<double>(hist.max_abundance()) /
           static_cast<double>(hist.total);
}

double fisher_alpha(int64_t richness, int64_t total) {
    if (richness <= 1) return 0.0;
    if (richness >= total) return kFisherAlphaCap;

    const double s = static_cast<double>(richness);
    const double n = static_cast<double>(total);
    const auto f = [&](double alpha) {
        return alpha * std::log1p(n / alpha) - s;
    };

    // f is increasing in alpha with limits 0 and n, so a root exists in
    // (0, inf) whenever 1 < S < N. Bracket, bisect, then Newton-polish.
    double lo = 1e-12;
    double hi = 1.0;
    while (f(hi) < 0.0) hi *= 2.0;
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    double alpha = 0.5 * (lo + hi);
    for (int i = 0; i < 8; ++i) {
        const double deriv = std::log1p(n / alpha) - n / (alpha + n);
        if (deriv <= 0.0) break;
        const double step = f(alpha) / deriv;
        const double next = alpha - step;
        if (next <= 0.0) break;
        alpha = next;
        if (std::abs(step) < 1e-14 * alpha) break;
    }
    return alpha;
}

double fisher_alpha(const AbundanceHistogram& hist) {
    return fisher_alpha(hist.richness(), hist.total);
}

double kempton_taylor(const AbundanceHistogram& hist) {
    const int64_t s = hist.richness();
    if (s < 4) return 0.0;

    // Species ranked by increasing abundance; the quartile abundances
    // R1, R2 sit where the cumulative species count first reaches
    // ceil(S/4) and ceil(3S/4).
    std::vector<int64_t> abundances;
    abundances.reserve(hist.counts.size());
    for (const auto& [level, count] : hist.counts) abundances.push_back(count);
    std::sort(abundances.begin(), abundances.end());

    const int64_t q1_rank = (s + 3) / 4;        // ceil(0.25 S)
    const int64_t q2_rank = (3 * s + 3) / 4;    // ceil(0.75 S)
    const int64_t r1 = abundances[q1_rank - 1];
    const int64_t r2 = abundances[q2_rank - 1];
    if (r1 == r2) return 0.0;

    // n_r = number of species with abundance exactly r.
    int64_t n_r1 = 0, n_r2 = 0, between = 0;
    for (int64_t a : abundances) {
        if (a == r1) ++n_r1;
        else if (a == r2) ++n_r2;
        else if (a > r1 && a < r2) ++between;
    }
    const double numerator =
        0.5 * static_cast<double>(n_r1) + static_cast<double>(between) +
        0.5 * static_cast<double>(n_r2);
    return numerator / std::log(static_cast<double>(r2) / static_cast<double>(r1));
}

double total_information(const AbundanceHistogram& hist) {
    return static_cast<double>(hist.total) * shannon_wiener(hist);
}

std::array<double, 9> biodiversity_vector(const ChannelRaster& channel) {
    const AbundanceHistogram hist = histogram(channel);
    const double h = shannon_wiener(hist);
    return {margalef(hist),
            menhinick(hist),
            h,
            mcintosh(hist),
            berger_parker(hist),
            fisher_alpha(hist),
            kempton_taylor(hist),
            h,
            total_information(hist)};
}

}  // namespace bitw
