// Spawns the installed binary and checks exit codes, formats and determinism.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

int run(const std::string& args) {
    const std::string cmd = std::string(EFD_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string run_capture(const std::string& args, const std::string& tmp) {
    const std::string cmd = std::string(EFD_CLI_PATH) + " " + args + " >" + tmp + " 2>&1";
    if (std::system(cmd.c_str()) == -1) return "";
    std::ifstream f(tmp);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

int main() {
    const std::string dir = "cli_test_tmp";
    if (std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) != 0) return 1;

    // pipeline: gen then decompose, 3 mode columns
    check(run("gen --example 1 --out " + dir + "/ex1.csv") == 0, "gen exit 0");
    check(run("decompose --in " + dir + "/ex1.csv --fs 1000 --method efd --segments 4 --out " +
              dir + "/modes.csv") == 0,
          "decompose exit 0");
    {
        std::ifstream f(dir + "/modes.csv");
        std::string meta, header;
        std::getline(f, meta);
        std::getline(f, header);
        check(meta.rfind("# efd", 0) == 0, "metadata header present");
        check(header == "t,mode1,mode2,mode3", "three mode columns, got: " + header);
        std::size_t rows = 0;
        std::string line;
        while (std::getline(f, line)) ++rows;
        check(rows == 1000, "1000 sample rows");
    }

    // determinism: identical args give byte-identical outputs
    check(run("gen --example 4 --seed 77 --out " + dir + "/a.csv") == 0, "gen a");
    const std::string first = slurp(dir + "/a.csv");
    check(run("gen --example 4 --seed 77 --out " + dir + "/a.csv") == 0, "gen a again");
    check(first == slurp(dir + "/a.csv"), "byte-identical outputs");
    check(run("gen --example 4 --seed 78 --out " + dir + "/c.csv") == 0, "gen c");
    check(first != slurp(dir + "/c.csv"), "seed changes output");

    // exit codes
    check(run("decompose --in " + dir + "/ex1.csv --fs 1000 --segments 0 --out " + dir +
              "/x.csv") == 2,
          "segments 0 -> exit 2");
    check(run("decompose --in " + dir + "/missing.csv --fs 1000 --segments 4 --out " + dir +
              "/x.csv") == 3,
          "missing input -> exit 3");
    check(run("decompose --example 1 --method ewt --segments 3 --gamma 0.95 --out " + dir +
              "/x.csv") == 4,
          "inadmissible gamma -> exit 4");
    check(run("decompose --example 1 --segments 4") == 2, "missing --out -> exit 2");
    check(run("--help") == 0, "--help -> exit 0");

    // odd-length handling
    {
        std::ofstream f(dir + "/odd.txt");
        f << "1\n2\n1\n2\n3\n";
    }
    check(run("decompose --in " + dir + "/odd.txt --fs 10 --segments 1 --out " + dir +
              "/x.csv") == 3,
          "odd input -> exit 3");
    check(run("decompose --in " + dir + "/odd.txt --fs 10 --segments 1 --allow-truncate --out " +
              dir + "/x.csv") != 3,
          "--allow-truncate accepts odd input");

    // decompose summary: reconstruction residual below 1e-10
    {
        const std::string out = run_capture(
            "decompose --in " + dir + "/ex1.csv --fs 1000 --method efd --segments 4 --out " +
                dir + "/modes.csv",
            dir + "/stdout.txt");
        const auto pos = out.find("residual=");
        check(pos != std::string::npos, "summary has residual");
        if (pos != std::string::npos) {
            const double r = std::atof(out.c_str() + pos + 9);
            check(r < 1e-10, "summary residual " + std::to_string(r) + " < 1e-10");
        }
    }

    // ewt filter bank csv
    check(run("boundaries --example 1 --segments 3 --method ewt --out " + dir +
              "/bewt.json --bank " + dir + "/bank.csv") == 0,
          "boundaries --bank exit 0");
    {
        std::ifstream f(dir + "/bank.csv");
        std::string meta, header;
        std::getline(f, meta);
        std::getline(f, header);
        check(header == "bin,phi1,psi1,psi2", "bank header, got: " + header);
    }

    // boundaries json
    check(run("boundaries --example 1 --segments 4 --method efd --out " + dir + "/b.json") == 0,
          "boundaries exit 0");
    {
        const std::string j = slurp(dir + "/b.json");
        check(j.find("\"boundaries_bins\"") != std::string::npos, "json has bins");
        check(j.find("\"boundaries_hz\"") != std::string::npos, "json has hz");
        check(j.find("\"requested\": 4") != std::string::npos, "json requested");
        check(j.find("\"realized\": 3") != std::string::npos, "json realized");
    }

    // tfr tracks + grid
    check(run("tfr --example 3 --method efd --segments 3 --out " + dir + "/tracks.csv --grid " +
              dir + "/grid.csv --fmax 50") == 0,
          "tfr exit 0");
    {
        std::ifstream f(dir + "/tracks.csv");
        std::string meta, header;
        std::getline(f, meta);
        std::getline(f, header);
        check(header == "t,amplitude,frequency_hz,mode", "tracks header");
        std::ifstream g2(dir + "/grid.csv");
        std::getline(g2, meta);
        std::getline(g2, header);
        check(header == "t_bin,f_bin,intensity", "grid header");
    }

    // errors report
    check(run("errors --example 1 --method efd --segments 4 --out " + dir + "/err.csv") == 0,
          "errors exit 0");
    {
        std::ifstream f(dir + "/err.csv");
        std::string meta, header;
        std::getline(f, meta);
        std::getline(f, header);
        check(header == "truth,mode,correlation,rmse_full,rmse_central90", "errors header");
    }

    // fdm bands json
    check(run("decompose --example 1 --method fdm --out " + dir + "/fdm.csv --bands " + dir +
              "/bands.json") == 0,
          "fdm decompose exit 0");
    check(slurp(dir + "/bands.json").find("\"start_bin\"") != std::string::npos,
          "fdm band report");

    // quick bench on one example
    check(run("bench --examples 1 --reps 3 --out " + dir + "/bench.csv") == 0, "bench exit 0");
    {
        std::ifstream f(dir + "/bench.csv");
        std::string meta, header;
        std::getline(f, meta);
        std::getline(f, header);
        check(header == "example,method,median_seconds,runs", "bench header");
        std::size_t rows = 0;
        std::string line;
        while (std::getline(f, line)) ++rows;
        check(rows == 3, "bench rows for three methods");
    }

    if (std::system(("rm -rf " + dir).c_str()) != 0) return 1;
    if (failures == 0) {
        std::cout << "cli tests passed\n";
        return 0;
    }
    std::cerr << failures << " cli checks failed\n";
    return 1;
}
