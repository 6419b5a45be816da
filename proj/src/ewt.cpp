#include "efd/ewt.hpp"

#include <cmath>
#include <string>

#include "efd/errors.hpp"

namespace efd {

double meyer_beta(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return x * x * x * x * (35.0 - 84.0 * x + 70.0 * x * x - 20.0 * x * x * x);
}

double gamma_admissibility_bound(const BoundarySet& bs) {
    // interior boundaries only; the last wavelet has no upper transition and
    // the scaling filter none below zero, so neither constrains gamma
    double bound = 1.0;
    const auto& b = bs.boundaries;
    for (std::size_t i = 1; i + 2 < b.size(); ++i) {
        const double w1 = b[i], w2 = b[i + 1];
        if (w1 + w2 > 0.0) bound = std::min(bound, (w2 - w1) / (w2 + w1));
    }
    return bound;
}

EwtFilterBank build_filter_bank(const BoundarySet& boundaries, double gamma, std::size_t K) {
    if (K % 2 != 0) throw invalid_input("build_filter_bank requires even K");
    const auto& b = boundaries.boundaries;
    if (b.size() < 2) throw invalid_input("boundary set must delimit at least one segment");

    const double bound = gamma_admissibility_bound(boundaries);
    if (gamma <= 0.0 || gamma >= 1.0)
        throw config_error("gamma must lie in (0,1); got " + std::to_string(gamma));
    if (gamma > bound * (1.0 + 1e-12)) {
        // name the violated pair
        std::string pair;
        for (std::size_t i = 1; i + 2 < b.size(); ++i) {
            const double w1 = b[i], w2 = b[i + 1];
            if (w1 + w2 > 0.0 && (w2 - w1) / (w2 + w1) <= bound + 1e-15) {
                pair = "(" + std::to_string(w1) + ", " + std::to_string(w2) + ")";
                break;
            }
        }
        throw config_error("inadmissible gamma " + std::to_string(gamma) + " > bound " +
                           std::to_string(bound) + " violated by boundary pair " + pair);
    }

    const std::size_t half = K / 2;
    const double to_rad = M_PI / static_cast<double>(half);

    EwtFilterBank bank;
    bank.boundaries = boundaries;
    bank.gamma = gamma;
    bank.tau.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) bank.tau[i] = gamma * b[i] * to_rad;

    const std::size_t n_filters = b.size() - 1;
    bank.filters.assign(n_filters, std::vector<double>(half + 1, 0.0));
    for (std::size_t f = 0; f < n_filters; ++f) {
        const double wl = b[f] * to_rad, wh = b[f + 1] * to_rad;
        const double tl = bank.tau[f], th = bank.tau[f + 1];
        for (std::size_t k = 0; k <= half; ++k) {
            const double w = static_cast<double>(k) * to_rad;
            double lo_gain;
            if (f == 0) {
                lo_gain = 1.0;  // scaling filter
            } else if (tl > 0.0) {
                // rise with sin through the transition centered on wl
                lo_gain = std::sin(M_PI_2 * meyer_beta((w - wl + tl) / (2.0 * tl)));
            } else {
                lo_gain = w >= wl ? 1.0 : 0.0;
            }
            double hi_gain;
            if (f == n_filters - 1) {
                hi_gain = 1.0;  // last band held at gain 1 up to pi
            } else if (th > 0.0) {
                hi_gain = std::cos(M_PI_2 * meyer_beta((w - wh + th) / (2.0 * th)));
            } else {
                hi_gain = w <= wh ? 1.0 : 0.0;
            }
            bank.filters[f][k] = lo_gain * hi_gain;
        }
    }
    return bank;
}

DecompositionResult ewt_decompose(const Signal& signal, int n_segments,
                                  EwtSegmentation segmentation, double gamma) {
    const std::size_t k = signal.samples.size();
    if (k % 2 != 0) throw invalid_input("ewt_decompose requires an even-length signal");
    if (n_segments < 1) throw invalid_input("n_segments must be >= 1");

    Spectrum spec = forward_transform(signal);
    std::vector<double> mags = half_magnitudes(spec);
    BoundarySet bs = segmentation == EwtSegmentation::MidpointMaxima
                         ? boundaries_midpoint_maxima(mags, n_segments)
                         : boundaries_local_minima(mags, n_segments);
    if (gamma <= 0.0) gamma = std::min(gamma_admissibility_bound(bs), 0.99);
    EwtFilterBank bank = build_filter_bank(bs, gamma, k);

    const std::size_t half = k / 2;
    DecompositionResult res;
    res.method = Method::EWT;
    res.sample_rate = signal.sample_rate;
    res.boundaries = bs;
    res.dc_term = spec.coefficients[0].real();
    res.nyquist_term = spec.coefficients[half].real();
    res.dc_included = true;       // scaling filter has gain 1 at dc
    res.nyquist_included = true;  // last wavelet has gain 1 at pi
    res.discarded_tail.assign(k, 0.0);

    auto bands = bands_from_boundaries(bs, k);
    for (std::size_t f = 0; f < bank.filters.size(); ++f) {
        std::vector<cplx> masked(k, cplx(0.0, 0.0));
        masked[0] = spec.coefficients[0] * bank.filters[f][0];
        masked[half] = spec.coefficients[half] * bank.filters[f][half];
        for (std::size_t bin = 1; bin < half; ++bin) {
            masked[bin] = spec.coefficients[bin] * bank.filters[f][bin];
            masked[k - bin] = std::conj(masked[bin]);
        }
        std::vector<cplx> x = detail::ifft(masked);
        Mode m;
        m.label = static_cast<int>(f) + 1;
        if (f < bands.size()) m.band = bands[f];
        m.samples.resize(k);
        for (std::size_t i = 0; i < k; ++i) m.samples[i] = x[i].real();
        res.modes.push_back(std::move(m));
    }
    return res;
}

}  // namespace efd
