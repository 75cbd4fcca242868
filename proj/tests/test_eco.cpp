#include <doctest.h>

#include <cmath>

#include "bitw/eco_indices.hpp"
#include "bitw/errors.hpp"
#include "test_util.hpp"

using namespace bitw;

namespace {

ChannelRaster raster_of(std::vector<int> values, int rows, int cols) {
    ChannelRaster r;
    r.rows = rows;
    r.cols = cols;
    r.values = std::move(values);
    return r;
}

AbundanceHistogram hist_of(const std::vector<int64_t>& abundances) {
    AbundanceHistogram h;
    int level = 0;
    for (int64_t a : abundances) {
        h.counts[level++] = a;
        h.total += a;
    }
    return h;
}

}  // namespace

TEST_CASE("histogram counts exactly") {
    const auto h = histogram(raster_of({0, 0, 1, 2}, 2, 2));
    CHECK(h.total == 4);
    CHECK(h.richness() == 3);
    CHECK(h.counts.at(0) == 2);
    CHECK(h.counts.at(1) == 1);
    CHECK(h.counts.at(2) == 1);

    const auto flat = histogram(raster_of(std::vector<int>(16, 0), 4, 4));
    CHECK(flat.total == 16);
    CHECK(flat.richness() == 1);
    CHECK(flat.counts.at(0) == 16);
}

TEST_CASE("histogram recount property") {
    std::mt19937_64 rng(3);
    const auto raster = testutil::random_raster(rng, 16, 16);
    const auto h = histogram(raster);
    int64_t sum = 0;
    for (const auto& [level, n] : h.counts) {
        CHECK(n >= 1);
        sum += n;
    }
    CHECK(sum == 256);
}

TEST_CASE("margalef") {
    CHECK(margalef(hist_of({5, 5})) == doctest::Approx(1.0 / std::log(10.0)));
    CHECK(margalef(hist_of({100})) == doctest::Approx(0.0));
    AbundanceHistogram h;
    h.counts = {{0, 25}, {1, 25}, {2, 25}, {3, 25}};
    h.total = 100;
    CHECK(margalef(h) == doctest::Approx(3.0 / std::log(100.0)).epsilon(1e-12));
    CHECK(margalef(hist_of({1, 1})) == doctest::Approx(1.0 / std::log(2.0)));
    CHECK_THROWS_AS(margalef(hist_of({1})), UndefinedForSinglePixelError);
}

TEST_CASE("menhinick is S/N as printed") {
    CHECK(menhinick(hist_of({16})) == doctest::Approx(1.0 / 16.0));
    CHECK(menhinick(hist_of({1, 1, 1, 1})) == doctest::Approx(1.0));
    AbundanceHistogram h;
    for (int i = 0; i < 4; ++i) h.counts[i] = 25;
    h.total = 100;
    CHECK(menhinick(h) == doctest::Approx(0.04).epsilon(1e-12));
}

TEST_CASE("shannon wiener") {
    CHECK(shannon_wiener(hist_of({7})) == doctest::Approx(0.0));
    CHECK(shannon_wiener(hist_of({3, 3})) == doctest::Approx(std::log(2.0)));
    const double expected =
        -(0.5 * std::log(0.5) + 2.0 * 0.25 * std::log(0.25));
    CHECK(shannon_wiener(hist_of({2, 1, 1})) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("mcintosh") {
    CHECK(mcintosh(hist_of({9})) == doctest::Approx(1.0));
    CHECK(mcintosh(hist_of({4, 4})) == doctest::Approx(std::sqrt(32.0 / 50.0)).epsilon(1e-12));

    std::mt19937_64 rng(5);
    const auto raster = testutil::random_raster(rng, 8, 8, 16);
    const auto h = histogram(raster);
    double num = 0.0;
    for (const auto& [level, n] : h.counts) num += double(n) * double(n);
    const double s = static_cast<double>(h.richness());
    const double n_tot = static_cast<double>(h.total);
    const double direct = std::sqrt(num / ((n_tot - s + 1) * (n_tot - s + 1) + s - 1));
    CHECK(mcintosh(h) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("berger parker") {
    CHECK(berger_parker(hist_of({5, 5, 5, 5})) == doctest::Approx(0.25));
    CHECK(berger_parker(hist_of({6, 2})) == doctest::Approx(0.75));
    CHECK(berger_parker(hist_of({12})) == doctest::Approx(1.0));
}

TEST_CASE("fisher alpha solves S = alpha ln(1 + N/alpha)") {
    const double alpha = fisher_alpha(10, 100);
    CHECK(alpha > 2.7);
    CHECK(alpha < 2.8);
    CHECK(std::abs(alpha * std::log1p(100.0 / alpha) - 10.0) <= 1e-8);

    CHECK(fisher_alpha(1, 50) == doctest::Approx(0.0));
    CHECK(fisher_alpha(64, 64) == doctest::Approx(kFisherAlphaCap));

    // residual and monotonicity over random pairs
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int64_t> n_dist(3, 1000000);
    double prev = -1.0;
    for (int i = 0; i < 200; ++i) {
        const int64_t n = n_dist(rng);
        const int64_t s = 2 + static_cast<int64_t>(rng() % (n - 2));
        const double a = fisher_alpha(s, n);
        CHECK(std::abs(a * std::log1p(double(n) / a) - double(s)) <= 1e-8);
    }
    for (int64_t s = 2; s < 200; ++s) {
        const double a = fisher_alpha(s, 1000);
        CHECK(a > prev);
        prev = a;
    }
}

TEST_CASE("kempton taylor") {
    CHECK(kempton_taylor(hist_of({4, 4, 4, 4, 4})) == doctest::Approx(0.0));
    CHECK(kempton_taylor(hist_of({9})) == doctest::Approx(0.0));

    // brute-force construction of the ranked cumulative curve
    const std::vector<int64_t> fib = {1, 1, 2, 3, 5, 8, 13, 21};
    const auto h = hist_of(fib);
    std::vector<int64_t> sorted(fib);
    std::sort(sorted.begin(), sorted.end());
    const int64_t s = static_cast<int64_t>(sorted.size());
    const int64_t r1 = sorted[(s + 3) / 4 - 1];
    const int64_t r2 = sorted[(3 * s + 3) / 4 - 1];
    double half_ends = 0.0, middle = 0.0;
    for (int64_t a : sorted) {
        if (a == r1 || a == r2) half_ends += 0.5;
        else if (a > r1 && a < r2) middle += 1.0;
    }
    const double expected = (half_ends + middle) / std::log(double(r2) / double(r1));
    CHECK(kempton_taylor(h) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("total information is N times entropy") {
    CHECK(total_information(hist_of({11})) == doctest::Approx(0.0));
    const auto h = hist_of({2, 1, 1});
    CHECK(total_information(h) == doctest::Approx(4.0 * shannon_wiener(h)).epsilon(1e-12));

    // tiling doubles N with unchanged proportions
    const auto doubled = hist_of({4, 2, 2});
    CHECK(total_information(doubled) ==
          doctest::Approx(2.0 * total_information(h)).epsilon(1e-12));
}

TEST_CASE("biodiversity vector composition and degenerate case") {
    ChannelRaster constant = raster_of(std::vector<int>(64, 42), 8, 8);
    const auto v = biodiversity_vector(constant);
    REQUIRE(v.size() == 9);
    CHECK(v[0] == doctest::Approx(0.0));            // d_Mg
    CHECK(v[1] == doctest::Approx(1.0 / 64.0));     // d_Mn
    CHECK(v[2] == doctest::Approx(0.0));            // d_SW
    CHECK(v[3] == doctest::Approx(1.0));            // e_M
    CHECK(v[4] == doctest::Approx(1.0));            // d_BP
    CHECK(v[5] == doctest::Approx(0.0));            // d_F
    CHECK(v[6] == doctest::Approx(0.0));            // d_KT
    CHECK(v[7] == doctest::Approx(0.0));            // H
    CHECK(v[8] == doctest::Approx(0.0));            // I_total

    std::mt19937_64 rng(21);
    const auto raster = testutil::random_raster(rng, 16, 16);
    const auto h = histogram(raster);
    const auto w = biodiversity_vector(raster);
    CHECK(w[0] == margalef(h));
    CHECK(w[1] == menhinick(h));
    CHECK(w[2] == shannon_wiener(h));
    CHECK(w[3] == mcintosh(h));
    CHECK(w[4] == berger_parker(h));
    CHECK(w[5] == fisher_alpha(h));
    CHECK(w[6] == kempton_taylor(h));
    CHECK(w[7] == shannon_wiener(h));
    CHECK(w[8] == total_information(h));
}

TEST_CASE("indices are pixel-permutation and bound invariants") {
    std::mt19937_64 rng(31);
    auto raster = testutil::random_raster(rng, 12, 12);
    const auto before = biodiversity_vector(raster);

    std::shuffle(raster.values.begin(), raster.values.end(), rng);
    const auto after = biodiversity_vector(raster);
    for (int i = 0; i < 9; ++i) CHECK(before[i] == after[i]);  // bit-identical

    const auto h = histogram(raster);
    const double s = static_cast<double>(h.richness());
    CHECK(before[2] >= 0.0);
    CHECK(before[2] <= std::log(s) + 1e-12);
    CHECK(before[4] >= 1.0 / s);
    CHECK(before[4] <= 1.0);
    CHECK(before[1] > 0.0);
    CHECK(before[1] <= 1.0);
    for (double x : before) CHECK(std::isfinite(x));
}
