#include "efd/signal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "efd/errors.hpp"

namespace efd {

namespace {

void check_samples(const std::vector<double>& x) {
    if (x.size() < 2) throw invalid_input("signal must have at least 2 samples");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]))
            throw invalid_input("non-finite sample at index " + std::to_string(i));
    }
}

}  // namespace

Spectrum forward_transform(const Signal& signal) {
    check_samples(signal.samples);
    const std::size_t k = signal.samples.size();
    std::vector<cplx> in(k);
    for (std::size_t i = 0; i < k; ++i) in[i] = cplx(signal.samples[i], 0.0);
    std::vector<cplx> out = detail::fft(in);
    const double scale = 1.0 / static_cast<double>(k);
    for (auto& c : out) c *= scale;
    return Spectrum{std::move(out), signal.sample_rate};
}

Signal inverse_transform(const Spectrum& spectrum) {
    if (spectrum.coefficients.size() < 2) throw invalid_input("spectrum must have K >= 2");
    std::vector<cplx> out = detail::ifft(spectrum.coefficients);
    double max_im = 0.0, max_abs = 0.0;
    for (const auto& c : out) {
        max_im = std::max(max_im, std::abs(c.imag()));
        max_abs = std::max(max_abs, std::abs(c));
    }
    if (max_abs > 0.0 && max_im / max_abs > 1e-6)
        throw config_error("inverse transform of a non-conjugate-symmetric spectrum: "
                           "imaginary residue " + std::to_string(max_im / max_abs));
    Signal s;
    s.sample_rate = spectrum.sample_rate;
    s.samples.resize(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) s.samples[i] = out[i].real();
    return s;
}

std::vector<double> half_magnitudes(const Spectrum& spectrum) {
    const std::size_t k = spectrum.coefficients.size();
    if (k % 2 != 0) throw invalid_input("half_magnitudes requires even K");
    std::vector<double> m(k / 2 + 1);
    for (std::size_t i = 0; i <= k / 2; ++i) m[i] = std::abs(spectrum.coefficients[i]);
    return m;
}

AnalyticSeries analytic_signal(const std::vector<double>& samples, double sample_rate) {
    check_samples(samples);
    const std::size_t k = samples.size();
    if (k % 2 != 0) throw invalid_input("analytic_signal requires even length");
    if (k < 4) throw invalid_input("analytic_signal requires length >= 4");
    std::vector<cplx> in(k);
    for (std::size_t i = 0; i < k; ++i) in[i] = cplx(samples[i], 0.0);
    std::vector<cplx> spec = detail::fft(in);
    for (std::size_t i = 1; i < k / 2; ++i) spec[i] *= 2.0;
    for (std::size_t i = k / 2 + 1; i < k; ++i) spec[i] = cplx(0.0, 0.0);
    std::vector<cplx> z = detail::ifft(spec);
    const double scale = 1.0 / static_cast<double>(k);
    for (auto& c : z) c *= scale;
    return AnalyticSeries{std::move(z), sample_rate};
}

std::vector<double> unwrap_phase(const std::vector<double>& phase) {
    std::vector<double> out(phase.size());
    if (phase.empty()) return out;
    out[0] = phase[0];
    double correction = 0.0;
    const double pi = M_PI;
    for (std::size_t i = 1; i < phase.size(); ++i) {
        double d = phase[i] - phase[i - 1];
        if (d > pi)
            correction -= 2.0 * pi * std::floor((d + pi) / (2.0 * pi));
        else if (d < -pi)
            correction += 2.0 * pi * std::floor((-d + pi) / (2.0 * pi));
        out[i] = phase[i] + correction;
    }
    return out;
}

}  // namespace efd
