#pragma once

#include <string>
#include <vector>

#include "efd/segmentation.hpp"
#include "efd/signal.hpp"

namespace efd {

enum class Method { EFD, EWT, FDM };

std::string method_name(Method m);

/// One extracted component and the band it came from.
struct Mode {
    std::vector<double> samples;
    Band band;
    int label = 0;  // ordinal, ascending with band
};

struct DecompositionResult {
    std::vector<Mode> modes;          // ascending band order
    double dc_term = 0.0;             // X[0], reported for audit
    double nyquist_term = 0.0;        // X[K/2], reported for audit
    bool dc_included = false;         // dc already folded into a mode or the tail
    bool nyquist_included = false;    // nyquist already in the last mode or the tail
    std::vector<double> discarded_tail;  // content above the last boundary
    BoundarySet boundaries;
    Method method = Method::EFD;
    double sample_rate = 1.0;

    /// Sum of everything the decomposition owns; equals the input for the
    /// partition methods (EFD, FDM) to within floating-point error.
    std::vector<double> reconstruct() const;
};

/// 2*Re{ sum_{k in band} X[k] exp(j*2*pi*k*n/K) }, realized by zeroing all
/// bins outside band and its conjugate mirror and inverse-transforming.
/// Band bins must lie within [1, K/2-1]; an empty band yields zeros.
std::vector<double> band_mode(const Spectrum& spectrum, const Band& band);

/// Full pipeline: lowest-minima boundaries on the half-spectrum magnitudes,
/// one mode per band with spectral content, DC folded into the first mode,
/// Nyquist into the last mode only when the last boundary reaches K/2.
DecompositionResult efd_decompose(const Signal& signal, int n_segments);

/// Same mode assembly with caller-supplied boundaries.
DecompositionResult efd_decompose_with_boundaries(const Signal& signal, const BoundarySet& bs);

}  // namespace efd
