#pragma once

#include <cstddef>

#include "efd/decompose.hpp"
#include "efd/signal.hpp"

namespace efd {

/// Largest end bin e in [start_bin, K/2-1] such that the analytic partial sum
/// v[n] = sum_{k=start..e} X[k] exp(j*2*pi*k*n/K) has non-decreasing unwrapped
/// phase: centered differences >= -1e-10 at all interior n. Every candidate e
/// is tested (the property is not monotone in e) and the largest passing one
/// returned.
std::size_t phase_monotone_span(const Spectrum& spectrum, std::size_t start_bin);

/// Greedy low-to-high scan: emit FIBF_i = 2*Re{v} per maximal band, advance.
/// dc stays a separate term; Nyquist is appended to the last FIBF.
DecompositionResult fdm_decompose(const Signal& signal);

}  // namespace efd
