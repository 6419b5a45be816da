#pragma once

#include <cstddef>
#include <vector>

#include "efd/signal.hpp"

namespace efd {

/// Instantaneous amplitude/frequency of one mode versus time.
struct TFTrack {
    std::vector<double> times;        // seconds
    std::vector<double> amplitudes;   // A(t) >= 0
    std::vector<double> frequencies;  // Hz
    int mode_label = 0;
};

/// Rasterized time-frequency plane: accumulated amplitude per cell.
struct TFGrid {
    std::vector<double> time_edges;  // n_time + 1
    std::vector<double> freq_edges;  // n_freq + 1
    std::vector<std::vector<double>> intensity;  // [time][freq]
    std::size_t dropped = 0;  // samples with frequency outside [0, fmax]

    double total_intensity() const;
};

/// Analytic-signal attributes: amplitude envelope and the centered-difference
/// instantaneous frequency (one-sided at the ends — edge samples are
/// unreliable and excluded from the stated tolerances).
TFTrack instantaneous_attributes(const std::vector<double>& mode_samples, double sample_rate);

TFGrid tf_grid(const std::vector<TFTrack>& tracks, std::size_t n_time, std::size_t n_freq,
               double fmax);

}  // namespace efd
