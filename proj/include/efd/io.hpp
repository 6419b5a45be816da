#pragma once

#include <string>
#include <vector>

#include "efd/decompose.hpp"
#include "efd/ewt.hpp"
#include "efd/segmentation.hpp"
#include "efd/testbed.hpp"
#include "efd/tfr.hpp"

namespace efd {

inline constexpr const char* kVersion = "1.0.0";

/// First line of every output file: "# efd <version> | <args> | seed=<n>".
std::string metadata_header(const std::string& args_line);

/// Exact-round-trip float formatting (%.17g).
std::string fmt(double v);

void write_gen_csv(const std::string& path, const std::string& meta, const GeneratedExample& g);
void write_modes_csv(const std::string& path, const std::string& meta,
                     const DecompositionResult& res);
void write_boundaries_json(const std::string& path, const std::string& meta,
                           const BoundarySet& bs, double sample_rate, std::size_t K);
void write_bands_json(const std::string& path, const std::string& meta,
                      const DecompositionResult& res);
void write_tracks_csv(const std::string& path, const std::string& meta,
                      const std::vector<TFTrack>& tracks);
void write_grid_csv(const std::string& path, const std::string& meta, const TFGrid& grid);
void write_bench_csv(const std::string& path, const std::string& meta,
                     const std::vector<BenchRow>& rows);
void write_errors_csv(const std::string& path, const std::string& meta, const ErrorReport& rep,
                      const std::vector<std::string>& truth_names);
void write_filterbank_csv(const std::string& path, const std::string& meta,
                          const EwtFilterBank& bank);

/// Reads a signal from a plain one-value-per-line file, a single-column CSV,
/// or a multi-column CSV with a header naming a "signal" column (the format
/// `gen` writes). '#' lines are skipped.
Signal read_signal_csv(const std::string& path, double sample_rate, bool allow_truncate = false);

}  // namespace efd
