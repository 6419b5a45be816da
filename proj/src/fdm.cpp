#include "efd/fdm.hpp"

#include <cmath>

#include "efd/errors.hpp"

namespace efd {

namespace {

constexpr double kPhaseEps = 1e-10;

// Band content at the round-off floor counts as zero: its phase is noise and
// the scan treats it as monotone so empty stretches extend the span.
constexpr double kZeroContent = 1e-12;

// Non-decreasing unwrapped phase, centered differences at interior samples.
bool phase_monotone(const std::vector<cplx>& v, double spectrum_scale) {
    const std::size_t n = v.size();
    double vmax = 0.0;
    for (const auto& c : v) vmax = std::max(vmax, std::abs(c));
    if (vmax <= kZeroContent * spectrum_scale) return true;
    std::vector<double> ph(n);
    for (std::size_t i = 0; i < n; ++i) ph[i] = std::atan2(v[i].imag(), v[i].real());
    std::vector<double> u = unwrap_phase(ph);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if ((u[i + 1] - u[i - 1]) / 2.0 < -kPhaseEps) return false;
    }
    return true;
}

}  // namespace

std::size_t phase_monotone_span(const Spectrum& spectrum, std::size_t start_bin) {
    const std::size_t k = spectrum.size();
    if (k % 2 != 0) throw invalid_input("phase_monotone_span requires even K");
    const std::size_t limit = k / 2 - 1;
    if (start_bin < 1 || start_bin > limit)
        throw invalid_input("start_bin out of range [1, K/2-1]");

    // rotation table: w[m] = exp(j*2*pi*m/K)
    std::vector<cplx> w(k);
    for (std::size_t m = 0; m < k; ++m) {
        const double a = 2.0 * M_PI * static_cast<double>(m) / static_cast<double>(k);
        w[m] = cplx(std::cos(a), std::sin(a));
    }
    double scale = 0.0;
    for (std::size_t b = 1; b <= limit; ++b)
        scale = std::max(scale, std::abs(spectrum.coefficients[b]));

    std::vector<cplx> v(k, cplx(0.0, 0.0));
    std::size_t best = start_bin;
    for (std::size_t e = start_bin; e <= limit; ++e) {
        const cplx c = spectrum.coefficients[e];
        std::size_t idx = 0;
        for (std::size_t n = 0; n < k; ++n) {
            v[n] += c * w[idx];
            idx += e;
            if (idx >= k) idx -= k;
        }
        if (phase_monotone(v, scale)) best = e;
    }
    return best;
}

DecompositionResult fdm_decompose(const Signal& signal) {
    const std::size_t k = signal.samples.size();
    if (k % 2 != 0) throw invalid_input("fdm_decompose requires an even-length signal");
    Spectrum spec = forward_transform(signal);
    const std::size_t half = k / 2;
    const std::size_t limit = half - 1;

    DecompositionResult res;
    res.method = Method::FDM;
    res.sample_rate = signal.sample_rate;
    res.dc_term = spec.coefficients[0].real();
    res.nyquist_term = spec.coefficients[half].real();
    res.dc_included = false;  // reported separately, never folded
    res.discarded_tail.assign(k, 0.0);
    res.boundaries.boundaries.push_back(0.0);

    std::size_t start = 1;
    int label = 1;
    while (start <= limit) {
        const std::size_t end = phase_monotone_span(spec, start);
        Band band{static_cast<double>(start), static_cast<double>(end + 1), start, end + 1};
        Mode m;
        m.band = band;
        m.label = label++;
        m.samples = band_mode(spec, band);
        res.modes.push_back(std::move(m));
        res.boundaries.boundaries.push_back(static_cast<double>(end + 1));
        start = end + 1;
    }
    res.boundaries.requested = static_cast<int>(res.modes.size());
    res.boundaries.realized = static_cast<int>(res.modes.size());

    if (!res.modes.empty()) {
        double sign = 1.0;
        for (auto& v : res.modes.back().samples) {
            v += res.nyquist_term * sign;
            sign = -sign;
        }
        res.nyquist_included = true;
    }
    return res;
}

}  // namespace efd
