#include "efd/decompose.hpp"

#include <cmath>

#include "efd/errors.hpp"

namespace efd {

std::string method_name(Method m) {
    switch (m) {
        case Method::EFD: return "efd";
        case Method::EWT: return "ewt";
        case Method::FDM: return "fdm";
    }
    return "?";
}

std::vector<double> DecompositionResult::reconstruct() const {
    std::size_t k = discarded_tail.size();
    for (const auto& m : modes) k = std::max(k, m.samples.size());
    std::vector<double> out(k, 0.0);
    for (const auto& m : modes)
        for (std::size_t i = 0; i < m.samples.size(); ++i) out[i] += m.samples[i];
    for (std::size_t i = 0; i < discarded_tail.size(); ++i) out[i] += discarded_tail[i];
    if (!dc_included)
        for (auto& v : out) v += dc_term;
    if (!nyquist_included) {
        double sign = 1.0;
        for (auto& v : out) {
            v += nyquist_term * sign;
            sign = -sign;
        }
    }
    return out;
}

std::vector<double> band_mode(const Spectrum& spectrum, const Band& band) {
    const std::size_t k = spectrum.coefficients.size();
    if (k % 2 != 0) throw invalid_input("band_mode requires even K");
    if (band.bin_end > band.bin_begin) {
        if (band.bin_begin < 1 || band.bin_end > k / 2)
            throw invalid_input("band bins must lie within [1, K/2-1]");
    }
    std::vector<cplx> masked(k, cplx(0.0, 0.0));
    for (std::size_t b = band.bin_begin; b < band.bin_end; ++b) {
        masked[b] = spectrum.coefficients[b];
        masked[k - b] = spectrum.coefficients[k - b];
    }
    std::vector<cplx> x = detail::ifft(masked);
    std::vector<double> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = x[i].real();
    return out;
}

namespace {

DecompositionResult assemble(const Signal& signal, const Spectrum& spec, const BoundarySet& bs) {
    const std::size_t k = signal.samples.size();
    const std::size_t half = k / 2;

    DecompositionResult res;
    res.method = Method::EFD;
    res.sample_rate = signal.sample_rate;
    res.boundaries = bs;
    res.dc_term = spec.coefficients[0].real();
    res.nyquist_term = spec.coefficients[half].real();

    const double b_last = bs.boundaries.back();
    const bool last_owns_nyquist = b_last == static_cast<double>(half);

    // Mode content is drawn from bins [1, K/2-1]; bin 0 is the dc_term and
    // bin K/2 the nyquist_term. Bands left with no bins yield no mode.
    int label = 1;
    for (const Band& raw : bands_from_boundaries(bs, k)) {
        Band b = raw;
        b.bin_begin = std::max<std::size_t>(b.bin_begin, 1);
        b.bin_end = std::min<std::size_t>(b.bin_end, half);
        if (b.bin_end <= b.bin_begin) continue;
        Mode m;
        m.band = b;
        m.label = label++;
        m.samples = band_mode(spec, b);
        res.modes.push_back(std::move(m));
    }

    const bool nyq_in_mode = last_owns_nyquist && !res.modes.empty();
    if (!res.modes.empty()) {
        for (auto& v : res.modes.front().samples) v += res.dc_term;
        res.dc_included = true;
        if (nyq_in_mode) {
            double sign = 1.0;
            for (auto& v : res.modes.back().samples) {
                v += res.nyquist_term * sign;
                sign = -sign;
            }
        }
    }

    // Tail: every bin at or above the last boundary, plus Nyquist when the
    // last mode does not own it.
    std::vector<cplx> masked(k, cplx(0.0, 0.0));
    const auto tail_begin = static_cast<std::size_t>(std::ceil(b_last));
    for (std::size_t b = std::max<std::size_t>(tail_begin, 1); b < half; ++b) {
        masked[b] = spec.coefficients[b];
        masked[k - b] = spec.coefficients[k - b];
    }
    if (!nyq_in_mode) masked[half] = spec.coefficients[half];
    std::vector<cplx> tail = detail::ifft(masked);
    res.discarded_tail.resize(k);
    for (std::size_t i = 0; i < k; ++i) res.discarded_tail[i] = tail[i].real();

    res.nyquist_included = true;  // either in the last mode or in the tail
    return res;
}

}  // namespace

DecompositionResult efd_decompose(const Signal& signal, int n_segments) {
    if (signal.samples.size() % 2 != 0)
        throw invalid_input("efd_decompose requires an even-length signal");
    if (n_segments < 1) throw invalid_input("n_segments must be >= 1");
    Spectrum spec = forward_transform(signal);
    BoundarySet bs = boundaries_lowest_minima(half_magnitudes(spec), n_segments);
    return assemble(signal, spec, bs);
}

DecompositionResult efd_decompose_with_boundaries(const Signal& signal, const BoundarySet& bs) {
    if (signal.samples.size() % 2 != 0)
        throw invalid_input("efd_decompose requires an even-length signal");
    if (bs.boundaries.size() < 2 || bs.boundaries.front() != 0.0)
        throw invalid_input("boundary set must start at 0 and delimit at least one segment");
    Spectrum spec = forward_transform(signal);
    return assemble(signal, spec, bs);
}

}  // namespace efd
