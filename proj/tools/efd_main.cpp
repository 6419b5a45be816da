#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "efd/errors.hpp"
#include "efd/ewt.hpp"
#include "efd/fdm.hpp"
#include "efd/io.hpp"
#include "efd/testbed.hpp"
#include "efd/tfr.hpp"

namespace {

using namespace efd;

// argument problems discovered after CLI11 parsing; exit code 2
class arg_error : public std::runtime_error {
public:
    explicit arg_error(const std::string& msg) : std::runtime_error(msg) {}
};

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) s += " ";
        s += argv[i];
    }
    return s;
}

double parse_snr(const std::string& s) {
    if (s == "none") return std::numeric_limits<double>::infinity();
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw arg_error("bad --snr value '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw arg_error("bad --snr value '" + s + "'");
    }
}

struct CommonInput {
    std::string in_path;
    int example = 0;
    double fs = 0.0;
    std::uint32_t seed = 1234;
    std::string snr = "20";
    bool allow_truncate = false;
};

void add_input_flags(CLI::App* cmd, CommonInput& ci, bool need_fs = true) {
    auto* in = cmd->add_option("--in", ci.in_path, "input signal file (csv or one value per line)");
    auto* ex = cmd->add_option("--example", ci.example, "built-in example id (1-4)")
                   ->check(CLI::Range(1, 4));
    in->excludes(ex);
    ex->excludes(in);
    auto* fs = cmd->add_option("--fs", ci.fs, "sample rate in Hz")->check(CLI::PositiveNumber);
    if (need_fs) in->needs(fs);
    cmd->add_option("--seed", ci.seed, "noise seed (example 4)");
    cmd->add_option("--snr", ci.snr, "noise SNR in dB for example 4, or 'none'");
    cmd->add_flag("--allow-truncate", ci.allow_truncate,
                  "drop the final sample of an odd-length input");
}

Signal resolve_input(const CommonInput& ci) {
    if (ci.example > 0) {
        ExampleSpec spec;
        spec.id = ci.example;
        spec.seed = ci.seed;
        spec.snr_db = parse_snr(ci.snr);
        if (ci.fs > 0.0) spec.sample_rate = ci.fs;
        return gen_example(spec).signal;
    }
    if (ci.in_path.empty()) throw arg_error("one of --in or --example is required");
    if (ci.fs <= 0.0) throw arg_error("--fs is required with --in");
    return read_signal_csv(ci.in_path, ci.fs, ci.allow_truncate);
}

EwtSegmentation parse_segmentation(const std::string& s) {
    if (s == "midpoint") return EwtSegmentation::MidpointMaxima;
    if (s == "local-minima") return EwtSegmentation::LocalMinima;
    throw arg_error("unknown segmentation '" + s + "'");
}

double residual(const DecompositionResult& res, const Signal& sig) {
    const auto recon = res.reconstruct();
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < sig.samples.size(); ++i) {
        num = std::max(num, std::abs(recon[i] - sig.samples[i]));
        den = std::max(den, std::abs(sig.samples[i]));
    }
    return den > 0.0 ? num / den : num;
}

int run(int argc, char** argv) {
    CLI::App app{"efd - adaptive Fourier-spectrum signal decomposition"};
    app.require_subcommand(1);
    const std::string meta = metadata_header(join_args(argc, argv));

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a built-in synthetic example");
    int gen_id = 1;
    double gen_fs = 0.0, gen_dur = 0.0;
    std::uint32_t gen_seed = 1234;
    std::string gen_snr = "20", gen_out;
    gen->add_option("--example", gen_id, "example id (1-4)")->required()->check(CLI::Range(1, 4));
    gen->add_option("--fs", gen_fs, "sample rate override")->check(CLI::PositiveNumber);
    gen->add_option("--duration", gen_dur, "duration override (s)")->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed, "noise seed (example 4)");
    gen->add_option("--snr", gen_snr, "SNR in dB for example 4, or 'none'");
    gen->add_option("--out", gen_out, "output csv")->required();
    gen->callback([&] {
        ExampleSpec spec;
        spec.id = gen_id;
        spec.sample_rate = gen_fs;
        spec.duration = gen_dur;
        spec.seed = gen_seed;
        spec.snr_db = parse_snr(gen_snr);
        const GeneratedExample g = gen_example(spec);
        write_gen_csv(gen_out, meta + " | seed=" + std::to_string(gen_seed), g);
        std::cout << "example=" << gen_id << " samples=" << g.signal.samples.size()
                  << " fs=" << g.signal.sample_rate << " components=" << g.components.size()
                  << " -> " << gen_out << "\n";
    });

    // ---- boundaries ----
    auto* bnd = app.add_subcommand("boundaries", "compute segment boundaries");
    CommonInput bnd_in;
    add_input_flags(bnd, bnd_in);
    int bnd_segments = 0;
    std::string bnd_method = "efd", bnd_segmentation = "midpoint", bnd_out, bnd_bank;
    double bnd_gamma = 0.0;
    bnd->add_option("--segments", bnd_segments, "requested segment count")
        ->required()
        ->check(CLI::PositiveNumber);
    bnd->add_option("--method", bnd_method, "efd | ewt")
        ->check(CLI::IsMember({"efd", "ewt"}));
    bnd->add_option("--segmentation", bnd_segmentation, "ewt rule: midpoint | local-minima")
        ->check(CLI::IsMember({"midpoint", "local-minima"}));
    bnd->add_option("--gamma", bnd_gamma, "ewt transition ratio (default: admissibility bound)");
    bnd->add_option("--out", bnd_out, "boundary json")->required();
    bnd->add_option("--bank", bnd_bank, "also write the ewt filter bank csv");
    bnd->callback([&] {
        const Signal sig = resolve_input(bnd_in);
        const Spectrum spec = forward_transform(sig);
        const auto mags = half_magnitudes(spec);
        BoundarySet bs;
        if (bnd_method == "efd") {
            bs = boundaries_lowest_minima(mags, bnd_segments);
        } else {
            bs = parse_segmentation(bnd_segmentation) == EwtSegmentation::MidpointMaxima
                     ? boundaries_midpoint_maxima(mags, bnd_segments)
                     : boundaries_local_minima(mags, bnd_segments);
        }
        write_boundaries_json(bnd_out, meta, bs, sig.sample_rate, sig.samples.size());
        if (!bnd_bank.empty()) {
            double g = bnd_gamma > 0.0 ? bnd_gamma
                                       : std::min(gamma_admissibility_bound(bs), 0.99);
            write_filterbank_csv(bnd_bank, meta, build_filter_bank(bs, g, sig.samples.size()));
        }
        std::cout << "method=" << bnd_method << " requested=" << bs.requested
                  << " realized=" << bs.realized << " -> " << bnd_out << "\n";
    });

    // ---- decompose ----
    auto* dec = app.add_subcommand("decompose", "decompose a signal into modes");
    CommonInput dec_in;
    add_input_flags(dec, dec_in);
    int dec_segments = 0;
    std::string dec_method = "efd", dec_segmentation = "midpoint", dec_out, dec_bands;
    double dec_gamma = 0.0;
    dec->add_option("--segments", dec_segments, "requested segment count (efd/ewt)")
        ->check(CLI::PositiveNumber);
    dec->add_option("--method", dec_method, "efd | ewt | fdm")
        ->check(CLI::IsMember({"efd", "ewt", "fdm"}));
    dec->add_option("--segmentation", dec_segmentation, "ewt rule: midpoint | local-minima")
        ->check(CLI::IsMember({"midpoint", "local-minima"}));
    dec->add_option("--gamma", dec_gamma, "ewt transition ratio (default: admissibility bound)");
    dec->add_option("--out", dec_out, "modes csv")->required();
    dec->add_option("--bands", dec_bands, "band report json");
    dec->callback([&] {
        const Signal sig = resolve_input(dec_in);
        DecompositionResult res;
        if (dec_method == "fdm") {
            res = fdm_decompose(sig);
        } else if (dec_method == "efd") {
            if (dec_segments < 1) throw arg_error("--segments is required for efd");
            res = efd_decompose(sig, dec_segments);
        } else {
            if (dec_segments < 1) throw arg_error("--segments is required for ewt");
            res = ewt_decompose(sig, dec_segments, parse_segmentation(dec_segmentation),
                                dec_gamma);
        }
        write_modes_csv(dec_out, meta + " | seed=" + std::to_string(dec_in.seed), res);
        if (!dec_bands.empty())
            write_bands_json(dec_bands, meta + " | seed=" + std::to_string(dec_in.seed), res);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3e", residual(res, sig));
        std::cout << "method=" << dec_method << " requested=" << res.boundaries.requested
                  << " realized=" << res.boundaries.realized << " modes=" << res.modes.size()
                  << " residual=" << buf << "\n";
    });

    // ---- tfr ----
    auto* tfr_cmd = app.add_subcommand("tfr", "time-frequency tracks of decomposed modes");
    CommonInput tfr_in;
    add_input_flags(tfr_cmd, tfr_in);
    int tfr_segments = 0;
    std::string tfr_method = "efd", tfr_segmentation = "midpoint", tfr_out, tfr_grid_path;
    std::size_t grid_time = 100, grid_freq = 100;
    double tfr_fmax = 0.0, tfr_gamma = 0.0;
    tfr_cmd->add_option("--segments", tfr_segments, "requested segment count (efd/ewt)")
        ->check(CLI::PositiveNumber);
    tfr_cmd->add_option("--method", tfr_method, "efd | ewt | fdm")
        ->check(CLI::IsMember({"efd", "ewt", "fdm"}));
    tfr_cmd->add_option("--segmentation", tfr_segmentation, "ewt rule")
        ->check(CLI::IsMember({"midpoint", "local-minima"}));
    tfr_cmd->add_option("--gamma", tfr_gamma, "ewt transition ratio");
    tfr_cmd->add_option("--out", tfr_out, "tracks csv")->required();
    tfr_cmd->add_option("--grid", tfr_grid_path, "rasterized tf grid csv");
    tfr_cmd->add_option("--grid-time", grid_time, "time cells")->check(CLI::PositiveNumber);
    tfr_cmd->add_option("--grid-freq", grid_freq, "frequency cells")->check(CLI::PositiveNumber);
    tfr_cmd->add_option("--fmax", tfr_fmax, "grid frequency ceiling (Hz)")
        ->check(CLI::PositiveNumber);
    tfr_cmd->callback([&] {
        const Signal sig = resolve_input(tfr_in);
        DecompositionResult res;
        if (tfr_method == "fdm") {
            res = fdm_decompose(sig);
        } else if (tfr_method == "efd") {
            if (tfr_segments < 1) throw arg_error("--segments is required for efd");
            res = efd_decompose(sig, tfr_segments);
        } else {
            if (tfr_segments < 1) throw arg_error("--segments is required for ewt");
            res = ewt_decompose(sig, tfr_segments, parse_segmentation(tfr_segmentation),
                                tfr_gamma);
        }
        std::vector<TFTrack> tracks;
        for (const auto& m : res.modes) {
            TFTrack tr = instantaneous_attributes(m.samples, sig.sample_rate);
            tr.mode_label = m.label;
            tracks.push_back(std::move(tr));
        }
        write_tracks_csv(tfr_out, meta, tracks);
        std::size_t dropped = 0;
        if (!tfr_grid_path.empty()) {
            const double fmax = tfr_fmax > 0.0 ? tfr_fmax : sig.sample_rate / 2.0;
            const TFGrid grid = tf_grid(tracks, grid_time, grid_freq, fmax);
            write_grid_csv(tfr_grid_path, meta, grid);
            dropped = grid.dropped;
        }
        std::cout << "method=" << tfr_method << " modes=" << res.modes.size()
                  << " tracks=" << tracks.size() << " dropped=" << dropped << "\n";
    });

    // ---- errors ----
    auto* err = app.add_subcommand("errors", "per-mode errors against example truths");
    int err_example = 1, err_segments = 0;
    std::uint32_t err_seed = 1234;
    std::string err_method = "efd", err_segmentation = "midpoint", err_snr = "20", err_out;
    double err_gamma = 0.0;
    err->add_option("--example", err_example, "example id (1-4)")
        ->required()
        ->check(CLI::Range(1, 4));
    err->add_option("--segments", err_segments, "requested segment count (efd/ewt)")
        ->check(CLI::PositiveNumber);
    err->add_option("--method", err_method, "efd | ewt | fdm")
        ->check(CLI::IsMember({"efd", "ewt", "fdm"}));
    err->add_option("--segmentation", err_segmentation, "ewt rule")
        ->check(CLI::IsMember({"midpoint", "local-minima"}));
    err->add_option("--gamma", err_gamma, "ewt transition ratio");
    err->add_option("--seed", err_seed, "noise seed (example 4)");
    err->add_option("--snr", err_snr, "SNR in dB for example 4, or 'none'");
    err->add_option("--out", err_out, "report csv")->required();
    err->callback([&] {
        ExampleSpec spec;
        spec.id = err_example;
        spec.seed = err_seed;
        spec.snr_db = parse_snr(err_snr);
        const GeneratedExample g = gen_example(spec);
        DecompositionResult res;
        if (err_method == "fdm") {
            res = fdm_decompose(g.signal);
        } else if (err_method == "efd") {
            if (err_segments < 1) throw arg_error("--segments is required for efd");
            res = efd_decompose(g.signal, err_segments);
        } else {
            if (err_segments < 1) throw arg_error("--segments is required for ewt");
            res = ewt_decompose(g.signal, err_segments, parse_segmentation(err_segmentation),
                                err_gamma);
        }
        // noise is not a truth component
        std::vector<std::vector<double>> truths;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < g.components.size(); ++i) {
            if (g.component_names[i] == "noise") continue;
            truths.push_back(g.components[i]);
            names.push_back(g.component_names[i]);
        }
        const ErrorReport rep = mode_errors(res.modes, truths);
        write_errors_csv(err_out, meta + " | seed=" + std::to_string(err_seed), rep, names);
        std::cout << "example=" << err_example << " method=" << err_method
                  << " assigned=" << rep.rows.size() << " -> " << err_out << "\n";
    });

    // ---- bench ----
    auto* ben = app.add_subcommand("bench", "wall-time comparison of efd/ewt/fdm");
    std::string ben_examples = "1,2,3,4,5", ben_ecg, ben_out;
    int ben_reps = 5;
    ben->add_option("--examples", ben_examples, "comma-separated ids (1-5)");
    ben->add_option("--reps", ben_reps, "timed repetitions per cell (>= 3)")
        ->check(CLI::Range(3, 1000000));
    ben->add_option("--ecg", ben_ecg, "sample file for example 5 (stand-in otherwise)");
    ben->add_option("--out", ben_out, "timing csv")->required();
    ben->callback([&] {
        std::vector<int> ids;
        std::stringstream ss(ben_examples);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                ids.push_back(std::stoi(tok));
            } catch (const std::logic_error&) {
                throw arg_error("bad --examples entry '" + tok + "'");
            }
        }
        const auto rows = benchmark(ids, ben_reps, ben_ecg);
        write_bench_csv(ben_out, meta, rows);
        for (const auto& r : rows)
            std::cout << "example " << r.example << " " << r.method << ": "
                      << fmt(r.median_seconds) << " s (median of " << r.runs << ")\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const arg_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const efd::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const efd::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const efd::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
