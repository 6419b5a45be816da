#pragma once

#include <cstddef>
#include <vector>

namespace efd {

/// Candidate peak for segmentation: an interior strict local maximum of the
/// half-spectrum magnitudes, or the bin-0 initial value.
struct ControlPoint {
    std::size_t bin = 0;
    double magnitude = 0.0;
};

/// Ordered segment boundaries in bin units over the half spectrum [0, K/2].
struct BoundarySet {
    std::vector<double> boundaries;  // b_0 = 0 < b_1 < ... < b_N
    int requested = 0;
    int realized = 0;  // N (after duplicate collapse)
};

/// Contiguous run of owned DFT bins: integer k with lo <= k < hi.
struct Band {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t bin_begin = 0;  // first owned bin
    std::size_t bin_end = 0;    // one past last owned bin

    std::size_t width() const { return bin_end - bin_begin; }
};

/// Bin 0 plus every interior strict local maximum (plateaus contribute their
/// first bin), sorted by magnitude descending, ties broken by lower bin.
std::vector<ControlPoint> detect_control_points(const std::vector<double>& magnitudes);

/// Proposed lowest-minima rule: boundaries at the global minimum of the
/// magnitudes over each closed interval between consecutive kept control
/// points (bin 0 counts as a candidate in the first interval), final boundary
/// at the midpoint of the last kept point and K/2.
BoundarySet boundaries_lowest_minima(const std::vector<double>& magnitudes, int n_segments);

/// Original EWT rule: midpoints between consecutive kept maxima (with 0 as
/// the left anchor), final boundary at K/2.
BoundarySet boundaries_midpoint_maxima(const std::vector<double>& magnitudes, int n_segments);

/// Local-minima variant: lowest minimum strictly between consecutive kept
/// maxima (no bin-0 control point, empty interval yields the midpoint),
/// final boundary at K/2.
BoundarySet boundaries_local_minima(const std::vector<double>& magnitudes, int n_segments);

/// Realize bin ownership: band i owns integer bins in [b_{i-1}, b_i); bins at
/// or above b_N belong to no band. Empty bands are dropped.
std::vector<Band> bands_from_boundaries(const BoundarySet& bs, std::size_t K);

}  // namespace efd
