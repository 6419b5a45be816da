#include "efd/segmentation.hpp"

#include <algorithm>
#include <cmath>

#include "efd/errors.hpp"

namespace efd {

namespace {

// Kept control-point bins in ascending order. Shared by all three methods.
std::vector<std::size_t> kept_points(const std::vector<ControlPoint>& ranked, int n_segments) {
    const std::size_t n_keep =
        std::min<std::size_t>(static_cast<std::size_t>(n_segments - 1), ranked.size());
    std::vector<std::size_t> bins;
    bins.reserve(n_keep);
    for (std::size_t i = 0; i < n_keep; ++i) bins.push_back(ranked[i].bin);
    std::sort(bins.begin(), bins.end());
    return bins;
}

BoundarySet finalize(std::vector<double> raw, int requested) {
    BoundarySet bs;
    bs.requested = requested;
    for (double b : raw) {
        if (bs.boundaries.empty() || b > bs.boundaries.back()) bs.boundaries.push_back(b);
    }
    bs.realized = static_cast<int>(bs.boundaries.size()) - 1;
    return bs;
}

// Global minimum over the closed bin interval [lo, hi], ties to the lowest bin.
std::size_t argmin_closed(const std::vector<double>& m, std::size_t lo, std::size_t hi) {
    std::size_t best = lo;
    for (std::size_t k = lo + 1; k <= hi; ++k)
        if (m[k] < m[best]) best = k;
    return best;
}

void check_inputs(const std::vector<double>& m, int n_segments) {
    if (m.size() < 3) throw invalid_input("magnitude sequence must have at least 3 bins");
    if (n_segments < 1) throw invalid_input("n_segments must be >= 1");
}

}  // namespace

std::vector<ControlPoint> detect_control_points(const std::vector<double>& magnitudes) {
    if (magnitudes.size() < 3) throw invalid_input("magnitude sequence must have at least 3 bins");
    std::vector<ControlPoint> pts;
    pts.push_back({0, magnitudes[0]});  // the initial value
    const std::size_t n = magnitudes.size();
    std::size_t k = 1;
    while (k + 1 < n) {
        if (magnitudes[k] > magnitudes[k - 1]) {
            // scan a possible plateau; it is a maximum if the first distinct
            // value after it is lower, and it contributes its first bin
            std::size_t j = k;
            while (j + 1 < n && magnitudes[j + 1] == magnitudes[k]) ++j;
            if (j + 1 < n && magnitudes[k] > magnitudes[j + 1]) pts.push_back({k, magnitudes[k]});
            k = j + 1;
        } else {
            ++k;
        }
    }
    std::stable_sort(pts.begin(), pts.end(), [](const ControlPoint& a, const ControlPoint& b) {
        if (a.magnitude != b.magnitude) return a.magnitude > b.magnitude;
        return a.bin < b.bin;
    });
    return pts;
}

BoundarySet boundaries_lowest_minima(const std::vector<double>& magnitudes, int n_segments) {
    check_inputs(magnitudes, n_segments);
    const std::size_t half = magnitudes.size() - 1;  // K/2
    if (n_segments == 1)
        return finalize({0.0, static_cast<double>(half)}, 1);

    auto ranked = detect_control_points(magnitudes);
    auto omegas = kept_points(ranked, n_segments);

    std::vector<double> raw{0.0};
    std::size_t prev = 0;
    for (std::size_t w : omegas) {
        // closed interval [prev, w]; a zero-width interval (kept bin-0 point)
        // yields bin 0 and collapses against b_0
        raw.push_back(static_cast<double>(argmin_closed(magnitudes, std::min(prev, w), w)));
        prev = w;
    }
    raw.push_back((static_cast<double>(omegas.back()) + static_cast<double>(half)) / 2.0);
    return finalize(std::move(raw), n_segments);
}

BoundarySet boundaries_midpoint_maxima(const std::vector<double>& magnitudes, int n_segments) {
    check_inputs(magnitudes, n_segments);
    const std::size_t half = magnitudes.size() - 1;
    if (n_segments == 1)
        return finalize({0.0, static_cast<double>(half)}, 1);

    auto ranked = detect_control_points(magnitudes);
    ranked.erase(std::remove_if(ranked.begin(), ranked.end(),
                                [](const ControlPoint& p) { return p.bin == 0; }),
                 ranked.end());
    auto omegas = kept_points(ranked, n_segments);

    std::vector<double> raw{0.0};
    double prev = 0.0;
    for (std::size_t w : omegas) {
        raw.push_back((prev + static_cast<double>(w)) / 2.0);
        prev = static_cast<double>(w);
    }
    raw.push_back(static_cast<double>(half));
    return finalize(std::move(raw), n_segments);
}

BoundarySet boundaries_local_minima(const std::vector<double>& magnitudes, int n_segments) {
    check_inputs(magnitudes, n_segments);
    const std::size_t half = magnitudes.size() - 1;
    if (n_segments == 1)
        return finalize({0.0, static_cast<double>(half)}, 1);

    auto ranked = detect_control_points(magnitudes);
    ranked.erase(std::remove_if(ranked.begin(), ranked.end(),
                                [](const ControlPoint& p) { return p.bin == 0; }),
                 ranked.end());
    auto omegas = kept_points(ranked, n_segments);
    if (omegas.empty())
        return finalize({0.0, static_cast<double>(half)}, n_segments);

    std::vector<double> raw{0.0};
    std::size_t prev = 0;
    for (std::size_t w : omegas) {
        if (w >= prev + 2) {
            raw.push_back(static_cast<double>(argmin_closed(magnitudes, prev + 1, w - 1)));
        } else {
            raw.push_back((static_cast<double>(prev) + static_cast<double>(w)) / 2.0);
        }
        prev = w;
    }
    raw.push_back(static_cast<double>(half));
    return finalize(std::move(raw), n_segments);
}

std::vector<Band> bands_from_boundaries(const BoundarySet& bs, std::size_t K) {
    if (K % 2 != 0) throw invalid_input("bands_from_boundaries requires even K");
    std::vector<Band> bands;
    for (std::size_t i = 1; i < bs.boundaries.size(); ++i) {
        const double lo = bs.boundaries[i - 1];
        const double hi = bs.boundaries[i];
        const auto begin = static_cast<std::size_t>(std::ceil(lo));
        const auto end = static_cast<std::size_t>(std::ceil(hi));
        if (end > begin) bands.push_back({lo, hi, begin, end});
    }
    return bands;
}

}  // namespace efd
