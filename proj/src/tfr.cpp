#include "efd/tfr.hpp"

#include <algorithm>
#include <cmath>

#include "efd/errors.hpp"

namespace efd {

double TFGrid::total_intensity() const {
    double s = 0.0;
    for (const auto& row : intensity)
        for (double v : row) s += v;
    return s;
}

TFTrack instantaneous_attributes(const std::vector<double>& mode_samples, double sample_rate) {
    const std::size_t k = mode_samples.size();
    if (k < 8 || k % 2 != 0)
        throw invalid_input("instantaneous_attributes requires even length >= 8");
    AnalyticSeries z = analytic_signal(mode_samples, sample_rate);

    TFTrack tr;
    tr.times.resize(k);
    tr.amplitudes.resize(k);
    tr.frequencies.resize(k);
    std::vector<double> ph(k);
    for (std::size_t i = 0; i < k; ++i) {
        tr.times[i] = static_cast<double>(i) / sample_rate;
        tr.amplitudes[i] = std::abs(z.values[i]);
        ph[i] = std::atan2(z.values[i].imag(), z.values[i].real());
    }
    std::vector<double> u = unwrap_phase(ph);
    const double scale = sample_rate / (2.0 * M_PI);
    tr.frequencies[0] = (u[1] - u[0]) * scale;
    for (std::size_t i = 1; i + 1 < k; ++i)
        tr.frequencies[i] = (u[i + 1] - u[i - 1]) / 2.0 * scale;
    tr.frequencies[k - 1] = (u[k - 1] - u[k - 2]) * scale;
    return tr;
}

TFGrid tf_grid(const std::vector<TFTrack>& tracks, std::size_t n_time, std::size_t n_freq,
               double fmax) {
    if (n_time < 1 || n_freq < 1) throw invalid_input("grid needs at least one cell per axis");
    if (!(fmax > 0.0)) throw invalid_input("fmax must be positive");

    double t_lo = 0.0, t_hi = 0.0;
    bool any = false;
    for (const auto& tr : tracks) {
        for (double t : tr.times) {
            if (!any) {
                t_lo = t_hi = t;
                any = true;
            } else {
                t_lo = std::min(t_lo, t);
                t_hi = std::max(t_hi, t);
            }
        }
    }
    if (!any) t_hi = 1.0;
    if (t_hi == t_lo) t_hi = t_lo + 1.0;

    TFGrid g;
    g.time_edges.resize(n_time + 1);
    g.freq_edges.resize(n_freq + 1);
    for (std::size_t i = 0; i <= n_time; ++i)
        g.time_edges[i] = t_lo + (t_hi - t_lo) * static_cast<double>(i) / static_cast<double>(n_time);
    for (std::size_t i = 0; i <= n_freq; ++i)
        g.freq_edges[i] = fmax * static_cast<double>(i) / static_cast<double>(n_freq);
    g.intensity.assign(n_time, std::vector<double>(n_freq, 0.0));

    const double t_span = t_hi - t_lo;
    for (const auto& tr : tracks) {
        for (std::size_t i = 0; i < tr.times.size(); ++i) {
            const double f = tr.frequencies[i];
            if (f < 0.0 || f > fmax) {
                ++g.dropped;
                continue;
            }
            auto ti = static_cast<std::size_t>((tr.times[i] - t_lo) / t_span * static_cast<double>(n_time));
            auto fi = static_cast<std::size_t>(f / fmax * static_cast<double>(n_freq));
            if (ti >= n_time) ti = n_time - 1;  // right edge lands in the last cell
            if (fi >= n_freq) fi = n_freq - 1;
            g.intensity[ti][fi] += tr.amplitudes[i];
        }
    }
    return g;
}

}  // namespace efd
