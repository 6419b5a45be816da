#pragma once

#include <vector>

#include "efd/decompose.hpp"
#include "efd/segmentation.hpp"
#include "efd/signal.hpp"

namespace efd {

enum class EwtSegmentation { MidpointMaxima, LocalMinima };

/// Meyer-style filter bank sampled on half-spectrum bins: one scaling filter
/// followed by N-1 wavelet filters, forming a partition of unity in the
/// squared gains for any admissible gamma.
struct EwtFilterBank {
    BoundarySet boundaries;          // in bin units, b_0 = 0, b_N = K/2
    double gamma = 0.0;
    std::vector<double> tau;         // per-boundary half transition width (radians)
    std::vector<std::vector<double>> filters;  // gains on bins 0..K/2
};

/// Transition profile of Eq-5 type: 0 below 0, 1 above 1, the standard
/// degree-7 polynomial between.
double meyer_beta(double x);

/// Largest gamma for which adjacent transition zones do not overlap:
/// min over consecutive interior boundaries of (w2 - w1) / (w2 + w1).
double gamma_admissibility_bound(const BoundarySet& bs);

EwtFilterBank build_filter_bank(const BoundarySet& boundaries, double gamma, std::size_t K);

/// Single application of each filter to the spectrum; modes in band order.
/// gamma <= 0 selects the admissibility bound computed from the realized
/// boundaries.
DecompositionResult ewt_decompose(const Signal& signal, int n_segments,
                                  EwtSegmentation segmentation = EwtSegmentation::MidpointMaxima,
                                  double gamma = 0.0);

}  // namespace efd
