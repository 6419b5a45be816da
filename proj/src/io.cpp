#include "efd/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "efd/errors.hpp"

namespace efd {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write " + path);
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) {
        const auto b = f.find_first_not_of(" \t\r");
        if (b == std::string::npos) {
            fields.push_back("");
            continue;
        }
        const auto e = f.find_last_not_of(" \t\r");
        fields.push_back(f.substr(b, e - b + 1));
    }
    return fields;
}

bool is_number(const std::string& s, double* out) {
    if (s.empty()) return false;
    char* endp = nullptr;
    const double v = std::strtod(s.c_str(), &endp);
    if (endp == s.c_str() || *endp != '\0') return false;
    if (out) *out = v;
    return true;
}

}  // namespace

std::string metadata_header(const std::string& args_line) {
    return std::string("# efd ") + kVersion + " | " + args_line;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_gen_csv(const std::string& path, const std::string& meta, const GeneratedExample& g) {
    auto out = open_out(path);
    out << meta << "\n";
    out << "t,signal";
    for (std::size_t i = 1; i <= g.components.size(); ++i) out << ",comp" << i;
    out << "\n";
    const double fs = g.signal.sample_rate;
    for (std::size_t n = 0; n < g.signal.samples.size(); ++n) {
        out << fmt(static_cast<double>(n) / fs) << "," << fmt(g.signal.samples[n]);
        for (const auto& c : g.components) out << "," << fmt(c[n]);
        out << "\n";
    }
}

void write_modes_csv(const std::string& path, const std::string& meta,
                     const DecompositionResult& res) {
    auto out = open_out(path);
    out << meta << "\n";
    out << "t";
    for (std::size_t i = 1; i <= res.modes.size(); ++i) out << ",mode" << i;
    out << "\n";
    const std::size_t k = res.modes.empty() ? 0 : res.modes.front().samples.size();
    for (std::size_t n = 0; n < k; ++n) {
        out << fmt(static_cast<double>(n) / res.sample_rate);
        for (const auto& m : res.modes) out << "," << fmt(m.samples[n]);
        out << "\n";
    }
}

void write_boundaries_json(const std::string& path, const std::string& meta,
                           const BoundarySet& bs, double sample_rate, std::size_t K) {
    auto out = open_out(path);
    nlohmann::ordered_json j;
    j["boundaries_bins"] = bs.boundaries;
    std::vector<double> hz;
    hz.reserve(bs.boundaries.size());
    for (double b : bs.boundaries) hz.push_back(b * sample_rate / static_cast<double>(K));
    j["boundaries_hz"] = hz;
    j["requested"] = bs.requested;
    j["realized"] = bs.realized;
    out << meta << "\n" << j.dump(2) << "\n";
}

void write_bands_json(const std::string& path, const std::string& meta,
                      const DecompositionResult& res) {
    auto out = open_out(path);
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& m : res.modes) {
        nlohmann::ordered_json b;
        b["mode"] = m.label;
        b["start_bin"] = m.band.bin_begin;
        b["end_bin"] = m.band.bin_end == 0 ? 0 : m.band.bin_end - 1;  // inclusive
        j.push_back(b);
    }
    out << meta << "\n" << j.dump(2) << "\n";
}

void write_tracks_csv(const std::string& path, const std::string& meta,
                      const std::vector<TFTrack>& tracks) {
    auto out = open_out(path);
    out << meta << "\n";
    out << "t,amplitude,frequency_hz,mode\n";
    for (const auto& tr : tracks) {
        for (std::size_t i = 0; i < tr.times.size(); ++i) {
            out << fmt(tr.times[i]) << "," << fmt(tr.amplitudes[i]) << ","
                << fmt(tr.frequencies[i]) << "," << tr.mode_label << "\n";
        }
    }
}

void write_grid_csv(const std::string& path, const std::string& meta, const TFGrid& grid) {
    auto out = open_out(path);
    out << meta << "\n";
    out << "t_bin,f_bin,intensity\n";
    for (std::size_t ti = 0; ti < grid.intensity.size(); ++ti)
        for (std::size_t fi = 0; fi < grid.intensity[ti].size(); ++fi)
            out << ti << "," << fi << "," << fmt(grid.intensity[ti][fi]) << "\n";
}

void write_bench_csv(const std::string& path, const std::string& meta,
                     const std::vector<BenchRow>& rows) {
    auto out = open_out(path);
    out << meta << "\n";
    out << "example,method,median_seconds,runs\n";
    for (const auto& r : rows)
        out << r.example << "," << r.method << "," << fmt(r.median_seconds) << "," << r.runs
            << "\n";
}

void write_errors_csv(const std::string& path, const std::string& meta, const ErrorReport& rep,
                      const std::vector<std::string>& truth_names) {
    auto out = open_out(path);
    out << meta << "\n";
    out << "truth,mode,correlation,rmse_full,rmse_central90\n";
    for (const auto& r : rep.rows) {
        const std::string name = r.truth_index < static_cast<int>(truth_names.size())
                                     ? truth_names[r.truth_index]
                                     : std::to_string(r.truth_index);
        out << name << ",mode" << (r.mode_index + 1) << "," << fmt(r.correlation) << ","
            << fmt(r.rmse_full) << "," << fmt(r.rmse_central90) << "\n";
    }
}

void write_filterbank_csv(const std::string& path, const std::string& meta,
                          const EwtFilterBank& bank) {
    auto out = open_out(path);
    out << meta << "\n";
    out << "bin";
    out << ",phi1";
    for (std::size_t i = 1; i < bank.filters.size(); ++i) out << ",psi" << i;
    out << "\n";
    if (bank.filters.empty()) return;
    for (std::size_t k = 0; k < bank.filters.front().size(); ++k) {
        out << k;
        for (const auto& f : bank.filters) out << "," << fmt(f[k]);
        out << "\n";
    }
}

Signal read_signal_csv(const std::string& path, double sample_rate, bool allow_truncate) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    Signal s;
    s.sample_rate = sample_rate;
    std::string line;
    std::size_t lineno = 0;
    int signal_col = -1;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_csv(line);
        if (fields.empty()) continue;
        double v = 0.0;
        if (!saw_header && !is_number(fields[0], nullptr)) {
            // header row; find the signal column for multi-column files
            saw_header = true;
            for (std::size_t i = 0; i < fields.size(); ++i)
                if (fields[i] == "signal") signal_col = static_cast<int>(i);
            if (fields.size() > 1 && signal_col < 0)
                throw parse_error(path + ": multi-column file without a 'signal' column");
            continue;
        }
        saw_header = true;
        const std::size_t col = signal_col >= 0 ? static_cast<std::size_t>(signal_col)
                                                : (fields.size() > 1 ? 1 : 0);
        if (fields.size() == 1) {
            if (!is_number(fields[0], &v))
                throw parse_error(path + ":" + std::to_string(lineno) + ": not a number: '" +
                                  fields[0] + "'");
        } else {
            if (col >= fields.size() || !is_number(fields[col], &v))
                throw parse_error(path + ":" + std::to_string(lineno) + ": bad row");
        }
        s.samples.push_back(v);
    }
    if (s.samples.size() < 2) throw parse_error(path + ": fewer than 2 samples");
    if (s.samples.size() % 2 != 0) {
        if (!allow_truncate)
            throw invalid_input(path + ": odd length " + std::to_string(s.samples.size()) +
                                " (pass --allow-truncate to drop the last sample)");
        s.samples.pop_back();
    }
    return s;
}

}  // namespace efd
