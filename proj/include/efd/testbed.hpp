#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "efd/decompose.hpp"
#include "efd/signal.hpp"

namespace efd {

/// Parameters for the built-in synthetic examples.
struct ExampleSpec {
    int id = 1;  // 1..4
    double sample_rate = 0.0;  // 0 selects the example default
    double duration = 0.0;     // 0 selects the example default
    std::uint32_t seed = 1234;         // example 4 only
    std::optional<double> snr_db = {};  // example 4 only; empty = example default (20 dB)
};

struct GeneratedExample {
    Signal signal;
    std::vector<std::vector<double>> components;  // truth components, noise last for id 4
    std::vector<std::string> component_names;
};

/// Per-mode fit against assigned truth components.
struct ErrorRow {
    int truth_index = 0;
    int mode_index = 0;
    double correlation = 0.0;  // signed Pearson
    double rmse_full = 0.0;
    double rmse_central90 = 0.0;
};

struct ErrorReport {
    std::vector<ErrorRow> rows;  // one per assigned truth, truth order
};

struct BenchRow {
    int example = 0;
    std::string method;
    double median_seconds = 0.0;
    int runs = 0;
};

GeneratedExample gen_example(const ExampleSpec& spec);

/// Additive white Gaussian noise at the requested SNR; deterministic per seed.
Signal add_awgn(const Signal& signal, double snr_db, std::uint32_t seed);

/// One numeric value per line (or single-column CSV with an optional header).
/// Lines starting with '#' are skipped. Odd lengths are rejected unless
/// allow_truncate drops the final sample.
Signal load_samples(const std::string& path, double sample_rate, bool allow_truncate = false);

double pearson(const std::vector<double>& a, const std::vector<double>& b);
double rmse(const std::vector<double>& a, const std::vector<double>& b);

/// Greedy assignment of truths to modes by maximal |Pearson|.
ErrorReport mode_errors(const std::vector<Mode>& modes,
                        const std::vector<std::vector<double>>& truths);

/// Deterministic ECG-shaped stand-in (baseline drift plus QRS-like pulses)
/// for timing runs when no real record is available.
Signal ecg_standin(std::size_t length = 1000, double sample_rate = 360.0);

/// Median wall time per method per example. Example 5 uses ecg_path when
/// given, the stand-in otherwise. Segment counts follow the comparison
/// protocol: EFD {4,5,3,4,11}, EWT one less except example 4.
std::vector<BenchRow> benchmark(const std::vector<int>& example_ids, int repetitions,
                                const std::string& ecg_path = "");

}  // namespace efd
