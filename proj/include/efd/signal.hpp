#pragma once

#include <complex>
#include <vector>

namespace efd {

using cplx = std::complex<double>;

/// Uniformly sampled real time series.
struct Signal {
    std::vector<double> samples;
    double sample_rate = 1.0;  // Hz

    std::size_t size() const { return samples.size(); }
    double duration() const { return static_cast<double>(samples.size()) / sample_rate; }
};

/// Full-length DFT coefficient sequence, analysis-normalized:
///   X[k] = (1/K) * sum_n x[n] * exp(-j*2*pi*k*n/K)
/// so that synthesis x[n] = sum_k X[k] * exp(j*2*pi*k*n/K) carries no factor.
struct Spectrum {
    std::vector<cplx> coefficients;
    double sample_rate = 1.0;

    std::size_t size() const { return coefficients.size(); }
    /// Hz per bin.
    double bin_width() const { return sample_rate / static_cast<double>(coefficients.size()); }
};

/// Complex series whose real part is the originating signal and whose
/// spectrum vanishes on the negative-frequency bins.
struct AnalyticSeries {
    std::vector<cplx> values;
    double sample_rate = 1.0;

    std::size_t size() const { return values.size(); }
};

Spectrum forward_transform(const Signal& signal);
Signal inverse_transform(const Spectrum& spectrum);

/// |X[k]| for k = 0..K/2 inclusive (length K/2+1). K must be even.
std::vector<double> half_magnitudes(const Spectrum& spectrum);

/// One-sided-spectrum construction: keep X[0] and X[K/2], double
/// X[1..K/2-1], zero X[K/2+1..K-1], inverse-transform.
AnalyticSeries analytic_signal(const std::vector<double>& samples, double sample_rate);

/// Cumulative correction of phase jumps exceeding pi.
std::vector<double> unwrap_phase(const std::vector<double>& phase);

namespace detail {
// Raw complex transforms without the 1/K convention (bare sums both ways).
std::vector<cplx> fft(const std::vector<cplx>& in);
std::vector<cplx> ifft(const std::vector<cplx>& in);
}  // namespace detail

}  // namespace efd
