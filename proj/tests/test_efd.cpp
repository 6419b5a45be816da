#include <doctest.h>

#include <cmath>
#include <random>

#include "efd/decompose.hpp"
#include "efd/errors.hpp"
#include "efd/testbed.hpp"
#include "oracles.hpp"

using namespace efd;

namespace {

Signal tone(double f0, double fs, std::size_t k, double amp = 1.0) {
    Signal s;
    s.sample_rate = fs;
    s.samples.resize(k);
    for (std::size_t n = 0; n < k; ++n)
        s.samples[n] = amp * std::cos(2.0 * M_PI * f0 * static_cast<double>(n) / fs);
    return s;
}

double recon_rel_err(const DecompositionResult& res, const Signal& sig) {
    auto r = res.reconstruct();
    return oracle::max_abs_diff(r, sig.samples) / oracle::max_abs(sig.samples);
}

std::vector<double> central(const std::vector<double>& x, double frac) {
    const auto drop = static_cast<std::size_t>(std::llround(x.size() * (1.0 - frac) / 2.0));
    return {x.begin() + drop, x.end() - drop};
}

}  // namespace

TEST_CASE("band_mode keeps a tone inside the band and kills one outside") {
    Signal s = tone(4.0, 1000.0, 1000);
    Spectrum spec = forward_transform(s);
    Band in{1.0, 10.0, 1, 10};
    auto kept = band_mode(spec, in);
    CHECK(oracle::max_abs_diff(kept, s.samples) < 1e-12);

    Band out{10.0, 100.0, 10, 100};
    auto zero = band_mode(spec, out);
    CHECK(oracle::max_abs(zero) < 1e-12);
}

TEST_CASE("band_mode equals the direct term-by-term sum") {
    auto x = oracle::random_signal(128, 44);
    Spectrum spec = forward_transform({x, 1.0});
    Band b{5.0, 20.0, 5, 20};
    auto got = band_mode(spec, b);
    auto want = oracle::direct_band_sum(spec.coefficients, 5, 20);
    CHECK(oracle::max_abs_diff(got, want) / oracle::max_abs(want) < 1e-10);
}

TEST_CASE("band_mode: empty band is a zero sequence, not an error") {
    Spectrum spec = forward_transform(tone(4.0, 1000.0, 1000));
    Band empty{3.0, 3.0, 3, 3};
    auto z = band_mode(spec, empty);
    CHECK(oracle::max_abs(z) == 0.0);
}

TEST_CASE("efd on a pure tone with N=1 returns the signal") {
    Signal s = tone(4.0, 1000.0, 1000);
    auto res = efd_decompose(s, 1);
    REQUIRE(res.modes.size() == 1);
    CHECK(oracle::max_abs_diff(res.modes[0].samples, s.samples) < 1e-12);
}

TEST_CASE("partition identity on the built-in examples") {
    for (int id : {1, 2, 3, 4}) {
        auto g = gen_example({id});
        for (int n : {1, 3, 5}) {
            auto res = efd_decompose(g.signal, n);
            CHECK(recon_rel_err(res, g.signal) < 1e-10);
        }
    }
}

TEST_CASE("partition identity on random signals with random boundaries") {
    std::mt19937 eng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t k = 64 + 2 * (eng() % 500);
        Signal s{oracle::random_signal(k, eng()), 100.0};
        BoundarySet bs;
        bs.boundaries.push_back(0.0);
        double b = 0.0;
        while (true) {
            b += 1.0 + static_cast<double>(eng() % (k / 8));
            if (b >= static_cast<double>(k / 2)) break;
            bs.boundaries.push_back(b);
        }
        if (eng() % 2 == 0) bs.boundaries.push_back(static_cast<double>(k / 2));
        if (bs.boundaries.size() < 2) bs.boundaries.push_back(static_cast<double>(k / 2));
        bs.requested = bs.realized = static_cast<int>(bs.boundaries.size()) - 1;
        auto res = efd_decompose_with_boundaries(s, bs);
        CHECK(recon_rel_err(res, s) < 1e-10);
    }
}

TEST_CASE("mode spectra stay inside their bands") {
    auto g = gen_example({1});
    auto res = efd_decompose(g.signal, 4);
    const std::size_t k = g.signal.samples.size();
    for (std::size_t mi = 0; mi < res.modes.size(); ++mi) {
        const auto& m = res.modes[mi];
        Spectrum ms = forward_transform({m.samples, g.signal.sample_rate});
        double scale = 0.0;
        for (const auto& c : ms.coefficients) scale = std::max(scale, std::abs(c));
        for (std::size_t bin = 1; bin <= k / 2; ++bin) {
            if (bin >= m.band.bin_begin && bin < m.band.bin_end) continue;
            if (bin == k / 2 && res.nyquist_included && mi + 1 == res.modes.size()) continue;
            CHECK(std::abs(ms.coefficients[bin]) / scale < 1e-10);
        }
    }
}

TEST_CASE("linearity over fixed boundaries") {
    auto x = oracle::random_signal(256, 3);
    Signal s{x, 100.0};
    BoundarySet bs;
    bs.boundaries = {0.0, 10.0, 40.0, 100.0};
    bs.requested = bs.realized = 3;
    auto r1 = efd_decompose_with_boundaries(s, bs);
    Signal s2 = s;
    for (auto& v : s2.samples) v *= -2.5;
    auto r2 = efd_decompose_with_boundaries(s2, bs);
    REQUIRE(r1.modes.size() == r2.modes.size());
    for (std::size_t i = 0; i < r1.modes.size(); ++i) {
        for (std::size_t n = 0; n < x.size(); ++n)
            CHECK(r2.modes[i].samples[n] ==
                  doctest::Approx(-2.5 * r1.modes[i].samples[n]).epsilon(1e-10));
    }
}

TEST_CASE("example 1 with N=4: three modes matching the component structure") {
    auto g = gen_example({1});
    auto res = efd_decompose(g.signal, 4);
    REQUIRE(res.modes.size() == 3);
    CHECK(res.boundaries.boundaries == std::vector<double>{0.0, 3.0, 19.0, 260.0});
    CHECK(res.dc_included);

    // assignment is forced by the correlation structure
    auto rep = mode_errors(res.modes, {g.components[0], g.components[1], g.components[2]});
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.rows[0].mode_index == 0);  // trend -> mode 1
    CHECK(rep.rows[1].mode_index == 1);  // 4 Hz -> mode 2
    CHECK(rep.rows[2].mode_index == 2);  // 20 Hz -> mode 3

    // The sawtooth leakage of the 6t trend caps the harmonic correlations well
    // below unity: the trend's quadrature component at bin 4 alone limits
    // mode 2 to ~0.973 even for a perfect single-bin extraction. The realized
    // bands give ~0.873 and ~0.917; assert the oracle-computed windows.
    CHECK(rep.rows[1].correlation > 0.85);
    CHECK(rep.rows[1].correlation < 0.90);
    CHECK(rep.rows[2].correlation > 0.90);
    CHECK(rep.rows[2].correlation < 0.94);

    // trend mode: central-90% RMSE within 1.05x of the hand-cut ideal filter
    Spectrum spec = forward_transform(g.signal);
    std::vector<double> orc = oracle::direct_band_sum(spec.coefficients, 1, 2);
    for (auto& v : orc) v += spec.coefficients[0].real();
    const double r_efd = rmse(central(res.modes[0].samples, 0.9), central(g.components[0], 0.9));
    const double r_orc = rmse(central(orc, 0.9), central(g.components[0], 0.9));
    CHECK(r_efd <= 1.05 * r_orc);
}

TEST_CASE("example 4 with seed 1234: noise tail is discarded") {
    auto g = gen_example({4});
    auto res = efd_decompose(g.signal, 4);
    double tail_energy = 0.0;
    for (double v : res.discarded_tail) tail_energy += v * v;
    CHECK(tail_energy > 0.0);
    CHECK(res.boundaries.boundaries.back() <
          static_cast<double>(g.signal.samples.size()) / 2.0);
}

TEST_CASE("efd rejects bad inputs") {
    Signal odd{{1, 2, 3}, 1.0};
    CHECK_THROWS_AS(efd_decompose(odd, 2), invalid_input);
    Signal ok{oracle::random_signal(64, 1), 1.0};
    CHECK_THROWS_AS(efd_decompose(ok, 0), invalid_input);
}
